#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "acmforge/capi.h"
#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string text, json, error;
};

Run run(const char* cmd, const char* job, const char* flags = "{}") {
    acmf_result* r = nullptr;
    int status = acmf_run(cmd, job, flags, &r);
    Run out{status, acmf_result_text(r), acmf_result_json(r), acmf_result_error(r)};
    CHECK(acmf_result_status(r) == status);
    acmf_result_free(r);
    return out;
}

const char* kQuadricJob =
    "ring x0 x1 x2 x3 x4\n"
    "hypersurface x0*x4 + x1*x3 + x2^2\n"
    "ideal x0*x2, x0*x3, x1*x2, x1*x3\n";

const char* kPencilJob =
    "ring x0 x1 x2 x3 x4\n"
    "hypersurface x0*x4 + x1*x3 + x2^2\n"
    "module gens 1 1\n";

const char* kPointJob =
    "ring x0 x1 x2 x3 x4\n"
    "hypersurface x0*x4 + x1*x3 + x2^2\n"
    "linear x1, x2, x3, x4\n";

}  // namespace

TEST_CASE("unit ideal basis through the c interface") {
    Run r = run("gb", "ring x0 x1\nideal x0, x0^2 + x1^2, 3\n");
    CHECK(r.status == 0);
    CHECK(r.error.empty());
    CHECK(r.text == "reduced groebner basis, 1 element\n1\n");
    auto j = nlohmann::json::parse(r.json);
    CHECK(j["command"] == "gb");
    CHECK(j["basis"] == nlohmann::json::array({"1"}));
}

TEST_CASE("status codes mirror the failure taxonomy") {
    CHECK(run("gb", "ring x0\nideal y\n").status == 2);
    CHECK(run("frobnicate", "").status == 2);
    CHECK(run("gb", "ring x0\n").status == 2);  // no ideal line
    CHECK(run("gb", "ring x0\nideal x0\n", "{\"bogus\":1}").status == 2);
    CHECK(run("gb", "ring x0\nideal x0\n", "not json").status == 2);
    Run exhausted = run("kleiman",
                        "ring x0 x1 x2 x3 x4\n"
                        "hypersurface x0*x4 + x1*x3 + x2^2\n"
                        "module gens 1 1\n"
                        "twists -9 -9 -9\n",
                        "{\"retries\":1}");
    CHECK(exhausted.status == 4);
    CHECK(exhausted.error.find("retries exhausted") == 0);
    CHECK(run("gb", "ring x0\nideal y\n").error.find("parse error: line 2, column 7") == 0);
}

TEST_CASE("null arguments do not crash") {
    acmf_result* r = nullptr;
    CHECK(acmf_run(nullptr, "", "{}", &r) == 2);
    CHECK(std::string(acmf_result_error(r)).find("precondition") == 0);
    acmf_result_free(r);
    CHECK(acmf_run("gb", "ring x0\nideal x0\n", nullptr, &r) == 0);
    acmf_result_free(r);
    CHECK(acmf_run("gb", nullptr, nullptr, &r) == 2);
    acmf_result_free(r);
    CHECK(acmf_run("gb", "", "{}", nullptr) == 2);
    acmf_result_free(nullptr);
    CHECK(acmf_result_status(nullptr) == 2);
    CHECK(std::string(acmf_version()) == "1.0.0");
}

TEST_CASE("json artifacts are canonical fixpoints of reparsing") {
    const std::pair<const char*, const char*> runs[] = {
        {"gb", kQuadricJob},      {"resolve", kQuadricJob}, {"betti", kQuadricJob},
        {"hilbert", kQuadricJob}, {"h0", kQuadricJob},      {"acm", kQuadricJob},
        {"split", kQuadricJob},   {"c2", kQuadricJob},      {"mf", kQuadricJob},
        {"report", kQuadricJob},  {"kleiman", kPencilJob},  {"linspace", kPointJob},
        {"voisin", kQuadricJob},
    };
    for (const auto& [cmd, job] : runs) {
        CAPTURE(cmd);
        Run r = run(cmd, job, "{\"seed\":11,\"nu\":2}");
        REQUIRE(r.status == 0);
        auto j = nlohmann::ordered_json::parse(r.json);
        CHECK(j.dump(2) + "\n" == r.json);
        CHECK(nlohmann::ordered_json::parse(j.dump(2)) == j);
    }
}

TEST_CASE("identical inputs give byte-identical outputs") {
    Run a = run("voisin", "", "{\"seed\":7,\"d\":2}");
    Run b = run("voisin", "", "{\"seed\":7,\"d\":2}");
    REQUIRE(a.status == 0);
    CHECK(a.text == b.text);
    CHECK(a.json == b.json);
    auto j = nlohmann::json::parse(a.json);
    CHECK(j["cert"]["acm"] == true);
    CHECK(j["cert"]["split"] == false);
    CHECK(j["cert"]["q2"] ==
          "no pure codimension-two subvariety S of P^n has X cap S = Y");
    CHECK(j["cert"]["q3"] == "the conormal sequence of Y in X does not split");

    Run k1 = run("kleiman", kPencilJob, "{\"seed\":11}");
    Run k2 = run("kleiman", kPencilJob, "{\"seed\":11}");
    REQUIRE(k1.status == 0);
    CHECK(k1.text == k2.text);
    CHECK(k1.json == k2.json);
    CHECK(nlohmann::json::parse(k1.json)["deg_y"] == 6);
}

TEST_CASE("the fixed report artifact key set") {
    Run r = run("report", kQuadricJob);
    REQUIRE(r.status == 0);
    auto j = nlohmann::ordered_json::parse(r.json);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) {
        (void)v;
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"deg_Y", "deg_c2", "d", "res_Y_mod_d",
                                           "res_c2_mod_d", "equivalent"});
    CHECK(j["equivalent"] == true);

    Run m = run("mf", kQuadricJob);
    REQUIRE(m.status == 0);
    auto mj = nlohmann::ordered_json::parse(m.json);
    keys.clear();
    for (const auto& [k, v] : mj.items()) {
        (void)v;
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"size", "d", "phi", "psi", "reduced"});
}

TEST_CASE("verify mode reports its cross-checks") {
    Run r = run("resolve", kQuadricJob, "{\"verify\":true}");
    REQUIRE(r.status == 0);
    CHECK(r.text.find("verify: consecutive differentials compose to zero: ok\n") !=
          std::string::npos);
    Run h = run("hilbert", kQuadricJob, "{\"verify\":true}");
    CHECK(h.text.find("verify: euler identity of the ambient resolution: ok\n") !=
          std::string::npos);
}
