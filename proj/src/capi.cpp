#include "acmforge/capi.h"

#include <string>

#include "acmforge/engine.hpp"

struct acmf_result {
    int status = 0;
    std::string text;
    std::string json;
    std::string error;
};

extern "C" {

int acmf_run(const char* command, const char* job_text, const char* flags_json,
             acmf_result** out) {
    if (!out) return static_cast<int>(acmforge::Status::usage);
    auto* r = new acmf_result();
    *out = r;
    if (!command) {
        r->status = static_cast<int>(acmforge::Status::usage);
        r->error = "precondition: command is null";
        return r->status;
    }
    try {
        acmforge::Flags flags = acmforge::flags_from_json(flags_json ? flags_json : "");
        acmforge::RunResult res =
            acmforge::run_command(command, job_text ? job_text : "", flags);
        r->status = static_cast<int>(res.status);
        r->text = std::move(res.text);
        r->json = std::move(res.json);
        r->error = std::move(res.error);
    } catch (const acmforge::ForgeError& e) {
        r->status = static_cast<int>(e.status());
        r->error = e.what();
    } catch (const std::exception& e) {
        r->status = static_cast<int>(acmforge::Status::invariant);
        r->error = std::string("invariant violation: unexpected error: ") + e.what();
    }
    return r->status;
}

int acmf_result_status(const acmf_result* r) {
    return r ? r->status : static_cast<int>(acmforge::Status::usage);
}

const char* acmf_result_text(const acmf_result* r) { return r ? r->text.c_str() : ""; }

const char* acmf_result_json(const acmf_result* r) { return r ? r->json.c_str() : ""; }

const char* acmf_result_error(const acmf_result* r) { return r ? r->error.c_str() : ""; }

void acmf_result_free(acmf_result* r) { delete r; }

const char* acmf_version(void) { return "1.0.0"; }

}  // extern "C"
