#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "acmforge/jobspec.hpp"
#include "helpers.hpp"

using namespace acmforge;
using namespace acmforge::testing;

namespace {

const char* kFullJob =
    "# dependency locus job\n"
    "field p=32003\n"
    "ring x0 x1 x2 x3 x4\n"
    "hypersurface x0*x4 + x1*x3 + x2^2\n"
    "ideal x0*x2, x0*x3, x1*x2, x1*x3\n"
    "module gens 1 1\n"
    "module rel x0, x1\n"
    "module rel x3, -x4\n"
    "linear x1, x2, x3, x4\n"
    "twists 0 0 0\n";

}  // namespace

TEST_CASE("every directive parses into the job") {
    JobSpec job = parse_job(kFullJob);
    CHECK(!job.rational);
    CHECK(job.prime == 32003);
    REQUIRE(job.ring != nullptr);
    CHECK(job.ring->vars == std::vector<std::string>{"x0", "x1", "x2", "x3", "x4"});
    CHECK(p_eq(job.f, p_parse(job.ring, "x2^2 + x1*x3 + x0*x4")));
    REQUIRE(job.has_ideal);
    REQUIRE(job.ideal.size() == 4);
    CHECK(p_eq(job.ideal[0], p_parse(job.ring, "x0*x2")));
    CHECK(p_eq(job.ideal[3], p_parse(job.ring, "x1*x3")));
    REQUIRE(job.has_module);
    CHECK(job.module_gens == std::vector<int>{1, 1});
    REQUIRE(job.module_rels.size() == 2);
    CHECK(p_eq(job.module_rels[1][1], p_neg(p_var(job.ring, 4))));
    REQUIRE(job.has_linear);
    CHECK(!job.linear_empty);
    CHECK(job.linear.size() == 4);
    REQUIRE(job.has_twists);
    CHECK(job.twists == std::vector<int>{0, 0, 0});
}

TEST_CASE("printing a parsed job is a fixpoint") {
    std::string canon = print_job(parse_job(kFullJob));
    CHECK(print_job(parse_job(canon)) == canon);
    CHECK(canon.find("hypersurface x2^2 + x1*x3 + x0*x4\n") != std::string::npos);
    CHECK(canon.find("field p=32003\n") == 0);

    JobSpec a = parse_job(kFullJob);
    JobSpec b = parse_job(canon);
    CHECK(p_str(a.f) == p_str(b.f));
    REQUIRE(a.ideal.size() == b.ideal.size());
    for (size_t i = 0; i < a.ideal.size(); ++i) CHECK(p_str(a.ideal[i]) == p_str(b.ideal[i]));
    CHECK(a.module_gens == b.module_gens);
    REQUIRE(a.module_rels.size() == b.module_rels.size());
    for (size_t j = 0; j < a.module_rels.size(); ++j)
        for (size_t i = 0; i < a.module_rels[j].size(); ++i)
            CHECK(p_str(a.module_rels[j][i]) == p_str(b.module_rels[j][i]));
    CHECK(a.twists == b.twists);
}

TEST_CASE("defaults, comments, and line endings") {
    JobSpec job = parse_job("ring x0 x1  # two variables\r\n\r\n  ideal x0, x1 # both\r\n");
    CHECK(job.prime == kDefaultPrime);
    CHECK(job.ring->field.characteristic() == kDefaultPrime);
    CHECK(job.ideal.size() == 2);
    CHECK(job.f.is_zero());
    CHECK(!job.has_module);
    CHECK(print_job(job) == "field p=32003\nring x0 x1\nideal x0, x1\n");
}

TEST_CASE("rational field jobs") {
    JobSpec job = parse_job("field q=rational\nring x y\nideal x^2 + 1/2*x*y\n");
    CHECK(job.rational);
    CHECK(job.ring->field.characteristic() == 0);
    std::string canon = print_job(job);
    CHECK(canon.find("field q=rational\n") == 0);
    CHECK(print_job(parse_job(canon)) == canon);
}

TEST_CASE("linear lists and the empty section") {
    JobSpec job = parse_job("ring x0 x1 x2\nlinear x1, x2\n");
    CHECK(job.has_linear);
    CHECK(job.linear.size() == 2);

    JobSpec empty = parse_job("ring x0 x1 x2\nlinear empty\n");
    CHECK(empty.has_linear);
    CHECK(empty.linear_empty);
    CHECK(empty.linear.empty());
    CHECK(print_job(empty) == "field p=32003\nring x0 x1 x2\nlinear empty\n");
}

TEST_CASE("diagnostics carry the line and column") {
    CHECK_THROWS_WITH_AS(parse_job("junk\n"),
                         "parse error: line 1, column 1: unknown directive 'junk'", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0\nring x1\n"),
                         "parse error: line 2, column 1: duplicate ring line", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nfield p=7\n"),
                         "parse error: line 2, column 1: field must precede ring", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ideal x0\n"),
                         "parse error: line 1, column 1: ideal before ring", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("field p=32004\n"),
                         "parse error: line 1, column 7: characteristic is not an odd prime",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("field p=ten\n"),
                         "parse error: line 1, column 7: expected p=<prime>, got 'p=ten'",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x0\n"),
                         "parse error: line 1, column 9: duplicate variable 'x0'", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 2y\n"),
                         "parse error: line 1, column 9: invalid variable name '2y'", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nhypersurface x0 + x1^2\n"),
                         "parse error: line 2, column 14: hypersurface must be homogeneous",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nideal x0*y\n"),
                         "parse error: line 2, column 7: unknown variable 'y'", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nideal x0,\n"),
                         "parse error: line 2, column 10: expected a polynomial", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0\nmodule gens 1 x\n"),
                         "parse error: line 2, column 15: expected an integer, got 'x'",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0\nmodule rel x0\n"),
                         "parse error: line 2, column 8: module rel before module gens",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nmodule gens 0 0\nmodule rel x0\n"),
                         "parse error: line 3, column 12: expected 2 entries, got 1", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nmodule gens 0 1\nmodule rel x0, x1\n"),
                         "parse error: line 3, column 12: relation column is not homogeneous",
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nmodule gens 0 0\nmodule rel 0, 0\n"),
                         "parse error: line 3, column 12: zero relation column", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nlinear x0*x1\n"),
                         "parse error: line 2, column 8: expected a linear form", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0 x1\nhypersurface x0^2\nhypersurface x1^2\n"),
                         "parse error: line 3, column 1: duplicate hypersurface line", ParseError);
    CHECK_THROWS_WITH_AS(parse_job("ring x0\nideal x0^99999999999\n"),
                         "parse error: line 2, column 7: malformed polynomial 'x0^99999999999'",
                         ParseError);
}

TEST_CASE("the module target realizes over the right ring") {
    JobSpec job = parse_job(kFullJob);
    PresentedModule m = job_module(job);
    CHECK(m.over == Over::quotient);
    CHECK(p_eq(m.f, job.f));
    CHECK(m.gens.degs == std::vector<int>{1, 1});
    CHECK(m.rel.cols() == 2);
    CHECK(m.rel.src.degs == std::vector<int>{2, 2});

    JobSpec ambient = parse_job("ring x0 x1\nmodule gens 0 0\nmodule rel x0, -x1\n");
    PresentedModule a = job_module(ambient);
    CHECK(a.over == Over::ambient);
    CHECK(a.rel.src.degs == std::vector<int>{1});

    JobSpec free = parse_job("ring x0 x1\nmodule gens 1 2\n");
    PresentedModule fr = job_module(free);
    CHECK(fr.rel.cols() == 0);
    CHECK(fr.gens.degs == std::vector<int>{1, 2});

    CHECK_THROWS_AS(job_module(parse_job("ring x0\nideal x0\n")), PreconditionError);
    CHECK_THROWS_AS(job_module(parse_job("")), PreconditionError);
}
