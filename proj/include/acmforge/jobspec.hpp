#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "acmforge/resolution.hpp"

namespace acmforge {

// Line-oriented job description. One directive per line, '#' starts a
// comment, blank lines ignored:
//   field p=32003            (or: field q=rational; must precede ring)
//   ring x0 x1 x2 x3 x4
//   hypersurface x0*x4 + x1*x3 + x2^2
//   ideal x0*x2, x0*x3, x1*x2, x1*x3
//   module gens 1 1          (generator degrees)
//   module rel x0, x1        (one relation column per line, after gens)
//   linear x1, x2, x3, x4    (or: linear empty)
//   twists 0 0 0
// Ill-formed input is rejected with line/column diagnostics; parsing the
// canonical print of a parsed job reproduces the same job.
struct JobSpec {
    bool rational = false;
    std::uint64_t prime = kDefaultPrime;

    Ring ring;  // null until a ring line appears
    Poly f;     // zero when there is no hypersurface line

    bool has_ideal = false;
    std::vector<Poly> ideal;

    bool has_module = false;
    std::vector<int> module_gens;
    std::vector<std::vector<Poly>> module_rels;  // relation columns

    bool has_linear = false;
    bool linear_empty = false;
    std::vector<Poly> linear;

    bool has_twists = false;
    std::vector<int> twists;
};

JobSpec parse_job(const std::string& text);
std::string print_job(const JobSpec& job);

// The module target as a presented module: over S_X when the job carries a
// hypersurface, over S otherwise. Relation columns are degree-checked here so
// bad input surfaces as a precondition error, not an internal violation.
PresentedModule job_module(const JobSpec& job);

}  // namespace acmforge
