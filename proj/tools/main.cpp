#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "acmforge/capi.h"

namespace {

constexpr const char* kJobFormat =
    "Job format (one directive per line, '#' comments):\n"
    "  field p=32003 | field q=rational   (optional, before ring)\n"
    "  ring x0 x1 x2 x3 x4\n"
    "  hypersurface x0*x4 + x1*x3 + x2^2\n"
    "  ideal x0*x2, x0*x3, x1*x2, x1*x3\n"
    "  module gens 1 1                    (generator degrees)\n"
    "  module rel x0, x1                  (one relation column per line)\n"
    "  linear x1, x2, x3, x4 | linear empty\n"
    "  twists 0 0 0\n";

int fail_usage(const std::string& reason) {
    std::cerr << reason << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("acm-forge: construct and certify arithmetically Cohen-Macaulay "
                             "subvarieties of hypersurfaces and their bundles.\n\n") +
                 kJobFormat};
    app.get_formatter()->column_width(26);

    std::string command;
    std::string job_path;
    unsigned long long seed = 0;
    int max_length = 4;
    int retries = 5;
    int d = 2;
    int nu = 0;
    bool verify = false;
    std::string json_path;

    app.add_option("command", command,
                   "one of: gb resolve betti acm mf split h0 hilbert c2 report "
                   "voisin linspace kleiman")
        ->required();
    app.add_option("job", job_path, "job file ('-' for stdin; omit for an empty job)");
    app.add_option("--seed", seed, "seed for randomized constructions")->capture_default_str();
    app.add_option("--max-length", max_length, "cutoff for resolutions over S_X")
        ->capture_default_str();
    app.add_option("--retries", retries, "resample budget for randomized searches")
        ->capture_default_str();
    app.add_option("--d", d, "hypersurface degree for generated fixtures")
        ->capture_default_str();
    app.add_option("--nu", nu, "twist for graded-piece dimensions")->capture_default_str();
    app.add_option("--json", json_path, "write the JSON artifact to this path");
    app.add_flag("--verify", verify, "re-run redundant invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string job_text;
    if (job_path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        job_text = buf.str();
    } else if (!job_path.empty()) {
        std::ifstream in(job_path, std::ios::binary);
        if (!in) return fail_usage("precondition: cannot read job file '" + job_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        job_text = buf.str();
    }

    std::ostringstream flags;
    flags << "{\"seed\":" << seed << ",\"max_length\":" << max_length
          << ",\"retries\":" << retries << ",\"d\":" << d << ",\"nu\":" << nu
          << ",\"verify\":" << (verify ? "true" : "false") << "}";

    acmf_result* res = nullptr;
    int status = acmf_run(command.c_str(), job_text.c_str(), flags.str().c_str(), &res);
    if (status == 0) {
        std::cout << acmf_result_text(res);
        if (!json_path.empty()) {
            std::ofstream out(json_path, std::ios::binary);
            if (!out) {
                acmf_result_free(res);
                return fail_usage("precondition: cannot write json file '" + json_path + "'");
            }
            out << acmf_result_json(res);
        }
    } else {
        std::cerr << acmf_result_error(res) << "\n";
    }
    acmf_result_free(res);
    return status;
}
