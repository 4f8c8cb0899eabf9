#pragma once
#include <cstdint>
#include <string>

#include "acmforge/errors.hpp"

namespace acmforge {

struct Flags {
    std::uint64_t seed = 0;
    int max_length = 4;  // quotient resolutions stop here
    int retries = 5;     // randomized searches resample this many times
    bool verify = false; // re-run redundant cross-checks and report them
    int d = 2;           // hypersurface degree for generated fixtures
    int nu = 0;          // twist for graded-piece dimensions
};

// {"seed":7,"verify":true,...}; unknown keys and wrong types are rejected
Flags flags_from_json(const std::string& flags_json);

struct RunResult {
    Status status = Status::ok;
    std::string text;   // human-readable report
    std::string json;   // machine-readable artifact for the same run
    std::string error;  // one-line reason when status != ok
};

// Execute one named command against a job description. Never throws; outputs
// are byte-identical for identical (command, job, flags).
RunResult run_command(const std::string& command, const std::string& job_text,
                      const Flags& flags);

}  // namespace acmforge
