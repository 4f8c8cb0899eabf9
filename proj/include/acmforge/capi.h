#ifndef ACMFORGE_CAPI_H
#define ACMFORGE_CAPI_H

/* C entry points of the engine. Every call fills a result handle; inspect the
 * status and the three strings, then free the handle. Status values mirror
 * process exit codes: 0 ok, 2 usage (parse or precondition), 3 invariant
 * violation, 4 retries exhausted. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct acmf_result acmf_result;

/* Run `command` against the job text, with flags as a JSON object like
 * {"seed":7,"max_length":4,"retries":5,"verify":false,"d":2,"nu":0}
 * (empty string or "{}" for defaults). Returns the status code; *out is always
 * set on return and must be freed with acmf_result_free. */
int acmf_run(const char* command, const char* job_text, const char* flags_json,
             acmf_result** out);

int acmf_result_status(const acmf_result* r);
const char* acmf_result_text(const acmf_result* r);  /* human-readable report */
const char* acmf_result_json(const acmf_result* r);  /* machine-readable artifact */
const char* acmf_result_error(const acmf_result* r); /* one-line reason, "" when ok */

void acmf_result_free(acmf_result* r);

const char* acmf_version(void);

#ifdef __cplusplus
}
#endif

#endif
