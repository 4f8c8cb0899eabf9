#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace acmforge;
using namespace acmforge::testing;

namespace {

// Independent syzygy route: adjoin tag components, compute a GB of
// { g_l + e_l } in R^(1+s) under a position-over-term order that makes the
// original component heaviest, and read off basis elements whose first
// component vanished. Completely separate from the transcript machinery.
std::vector<Vec> syzygies_by_pot_elimination(const FreeModule& amb,
                                             const std::vector<Vec>& gens) {
    REQUIRE(amb.rank() == 1);  // oracle only needed for ideals here
    const Ring& r = amb.ring;
    int s = static_cast<int>(gens.size());
    std::vector<int> degs(1 + s, 0);
    FreeModule big = free_module(r, degs);  // grading irrelevant for the oracle
    std::vector<Vec> input;
    for (int l = 0; l < s; ++l) {
        Vec v(big);
        v[0] = gens[l][0];
        v[1 + l] = p_one(r);
        input.push_back(std::move(v));
    }
    GBResult gb = groebner(big, input, ModOrderKind::pot);
    FreeModule syz_fm = free_module(r, std::vector<int>(s, 0));
    std::vector<Vec> out;
    for (const auto& b : gb.basis) {
        if (!b[0].is_zero()) continue;
        Vec w(syz_fm);
        for (int l = 0; l < s; ++l) w[l] = b[1 + l];
        out.push_back(std::move(w));
    }
    return out;
}

bool is_syzygy_of(const std::vector<Vec>& gens, const Vec& w) {
    Vec acc;
    bool started = false;
    for (std::size_t l = 0; l < gens.size(); ++l) {
        Vec t = v_poly_mul(gens[l], w[static_cast<int>(l)]);
        if (!started) {
            acc = t;
            started = true;
        } else {
            acc = v_add(acc, t);
        }
    }
    return acc.is_zero();
}

}  // namespace

TEST_CASE("twisted cubic reduced groebner basis") {
    Ring r = fp_ring({"x", "y", "z", "w"});
    std::vector<Poly> gens = ppv(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    std::vector<Poly> gb = groebner_ideal(r, gens);
    REQUIRE(gb.size() == 3);
    // canonical form: monic, ascending leads z2 < yz < y2
    CHECK(p_str(gb[0]) == "z^2 + 32002*y*w");
    CHECK(p_str(gb[1]) == "y*z + 32002*x*w");
    CHECK(p_str(gb[2]) == "y^2 + 32002*x*z");
    // hand-worked normal form: y3w reduces to x2w2
    Poly nf = nf_poly(pp(r, "y^3*w"), r, gb);
    CHECK(p_str(nf) == "x^2*w^2");
    CHECK(ideal_member(pp(r, "y^3*w - x^2*w^2"), r, gb));
    CHECK(!ideal_member(pp(r, "x^2*w^2"), r, gb));
    // idempotence: GB of a reduced GB is itself
    CHECK(ideal_equal(r, gb, groebner_ideal(r, gb)));
}

TEST_CASE("normal form transcript reconstructs the input") {
    Ring r = fp_ring({"x", "y", "z", "w"});
    std::vector<Poly> gens = ppv(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    FreeModule amb = free_module(r, {0});
    GBResult gb = groebner(amb, to_vec1(r, gens));
    Poly target = pp(r, "y^3*w + x*y*z*w");
    std::vector<Poly> q;
    Vec rem = normal_form(to_vec1(target), gb, &q);
    Poly rebuilt = rem[0];
    for (std::size_t k = 0; k < q.size(); ++k)
        rebuilt = p_add(rebuilt, p_mul(q[k], gb.basis[k][0]));
    CHECK(p_eq(rebuilt, target));
}

TEST_CASE("twisted cubic syzygies match the determinantal relations") {
    Ring r = fp_ring({"x", "y", "z", "w"});
    std::vector<Poly> gens = ppv(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
    FreeModule amb = free_module(r, {0});
    std::vector<Vec> syz = syzygy_module(amb, to_vec1(r, gens));
    REQUIRE(!syz.empty());
    for (const auto& w : syz) CHECK(is_syzygy_of(to_vec1(r, gens), w));
    // the two rows of the 2x3 presentation matrix
    FreeModule sfm = free_module(r, {2, 2, 2});
    Vec row1(sfm), row2(sfm);
    row1[0] = pp(r, "z");
    row1[1] = pp(r, "-y");
    row1[2] = pp(r, "x");
    row2[0] = pp(r, "w");
    row2[1] = pp(r, "-z");
    row2[2] = pp(r, "y");
    CHECK(is_syzygy_of(to_vec1(r, gens), row1));
    CHECK(is_syzygy_of(to_vec1(r, gens), row2));
    std::vector<Vec> syz_t;
    for (auto w : syz) syz_t.push_back(w);
    CHECK(module_equal(sfm, syz_t, {row1, row2}));
}

TEST_CASE("syzygy module agrees with pot elimination oracle") {
    Ring r = fp_ring({"x", "y", "z", "w"});
    FreeModule amb = free_module(r, {0});
    std::vector<std::vector<std::string>> cases = {
        {"x*z - y^2", "x*w - y*z", "y*w - z^2"},
        {"x", "y", "z"},
        {"x^2", "x*y", "y^3"},
        {"x*y - z*w", "x^2 - z^2", "y^2*z - w^3"},
    };
    for (const auto& cs : cases) {
        std::vector<Vec> gens = to_vec1(r, ppv(r, cs));
        std::vector<Vec> mine = syzygy_module(amb, gens);
        std::vector<Vec> oracle = syzygies_by_pot_elimination(amb, gens);
        for (const auto& w : mine) CHECK(is_syzygy_of(gens, w));
        for (const auto& w : oracle) CHECK(is_syzygy_of(gens, w));
        FreeModule sfm = free_module(r, std::vector<int>(cs.size(), 0));
        CHECK(module_equal(sfm, mine, oracle));
    }
}

TEST_CASE("koszul syzygies of three variables") {
    Ring r = fp_ring({"x", "y", "z"});
    FreeModule amb = free_module(r, {0});
    std::vector<Vec> gens = to_vec1(r, ppv(r, {"x", "y", "z"}));
    std::vector<Vec> syz = syzygy_module(amb, gens);
    FreeModule sfm = free_module(r, {1, 1, 1});
    auto mk = [&](const char* a, const char* b, const char* c) {
        Vec v(sfm);
        v[0] = pp(r, a);
        v[1] = pp(r, b);
        v[2] = pp(r, c);
        return v;
    };
    std::vector<Vec> koszul{mk("y", "-x", "0"), mk("z", "0", "-x"), mk("0", "z", "-y")};
    CHECK(module_equal(sfm, syz, koszul));
}

TEST_CASE("module groebner and syzygies with twists") {
    Ring r = fp_ring({"x", "y"});
    // columns of [[x, y], [y, x]] as a submodule of R(0)^2... degrees shift by 1
    FreeModule amb = free_module(r, {0, 0});
    Vec g0(amb), g1(amb);
    g0[0] = pp(r, "x");
    g0[1] = pp(r, "y");
    g1[0] = pp(r, "y");
    g1[1] = pp(r, "x");
    std::vector<Vec> syz = syzygy_module(amb, {g0, g1});
    // det = x2 - y2 is a nonzerodivisor, so the columns are independent
    CHECK(syz.empty());
    // add the combination x*g0 - y*g1... then e_new - (x e_0 - y e_1) appears
    Vec g2 = v_sub(v_poly_mul(g0, pp(r, "x")), v_poly_mul(g1, pp(r, "y")));
    std::vector<Vec> syz2 = syzygy_module(amb, {g0, g1, g2});
    REQUIRE(syz2.size() >= 1);
    for (const auto& w : syz2) CHECK(is_syzygy_of({g0, g1, g2}, w));
    FreeModule sfm = free_module(r, {1, 1, 2});
    Vec expect(sfm);
    expect[0] = pp(r, "x");
    expect[1] = pp(r, "-y");
    expect[2] = pp(r, "-1");
    CHECK(module_contains(sfm, syz2, expect));
}

TEST_CASE("groebner of inhomogeneous input terminates correctly") {
    Ring r = fp_ring({"x", "y"});
    std::vector<Poly> gb = groebner_ideal(r, ppv(r, {"x^2 - 1", "x*y - 1"}));
    // x2-1, xy-1: y = x in the quotient, and x2 = 1
    CHECK(ideal_member(pp(r, "y - x"), r, gb));
    CHECK(ideal_member(pp(r, "x^2 - 1"), r, gb));
    CHECK(!ideal_member(pp(r, "x - 1"), r, gb));
}

TEST_CASE("ideal intersection via tag elimination") {
    Ring r = fp_ring({"x", "y", "z"});
    CHECK(ideal_same(r, ideal_intersect(r, ppv(r, {"x"}), ppv(r, {"y"})), ppv(r, {"x*y"})));
    CHECK(ideal_same(r, ideal_intersect(r, ppv(r, {"x", "y"}), ppv(r, {"z"})),
                     ppv(r, {"x*z", "y*z"})));
    // (x,y) cap (x+y) in 2 vars: contains (x+y)*x? degree check below
    std::vector<Poly> m = ideal_intersect(r, ppv(r, {"x", "y"}), ppv(r, {"x + y"}));
    CHECK(ideal_same(r, m, ppv(r, {"x + y"})));  // x+y already lies in (x,y)
}

TEST_CASE("intersection routes agree on random ideals") {
    Ring r = fp_ring({"x0", "x1", "x2", "x3"});
    Rng rng(101);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Poly> a{p_random_homog(r, 2, rng), p_random_homog(r, 1, rng)};
        std::vector<Poly> b{p_random_homog(r, 2, rng), p_random_homog(r, 2, rng)};
        std::vector<Poly> via_tag = ideal_intersect(r, a, b);
        std::vector<Poly> via_syz = ideal_intersect_syz(r, a, b);
        CHECK(ideal_equal(r, via_tag, via_syz));
    }
}

TEST_CASE("colon and saturation") {
    Ring r = fp_ring({"x", "y", "z"});
    CHECK(ideal_same(r, ideal_colon(r, ppv(r, {"x*y", "x*z"}), pp(r, "x")),
                     ppv(r, {"y", "z"})));
    CHECK(ideal_same(r, ideal_colon(r, ppv(r, {"x^2", "x*y"}), ppv(r, {"x", "y"})),
                     ppv(r, {"x"})));
    CHECK(ideal_same(r, ideal_saturate(r, ppv(r, {"x^2", "x*y"}), ppv(r, {"x", "y"})),
                     ppv(r, {"x"})));
    // saturating the irrelevant ideal away from a point ideal: unchanged
    std::vector<Poly> pt = ppv(r, {"x", "y"});
    CHECK(ideal_same(r, ideal_saturate(r, pt, irrelevant_ideal(r)), pt));
    // a primary component supported at the irrelevant ideal disappears
    std::vector<Poly> mixed = ideal_intersect(r, pt, ppv(r, {"x^2", "y^2", "z^2"}));
    CHECK(ideal_same(r, ideal_saturate(r, mixed, irrelevant_ideal(r)), pt));
}

TEST_CASE("projective dimension") {
    Ring r = fp_ring({"x", "y", "z", "w"});
    CHECK(dimension_projective(r, {}) == 3);
    CHECK(dimension_projective(r, ppv(r, {"x"})) == 2);
    CHECK(dimension_projective(r, ppv(r, {"x", "y"})) == 1);
    CHECK(dimension_projective(r, ppv(r, {"x", "y", "z"})) == 0);
    CHECK(dimension_projective(r, ppv(r, {"x", "y", "z", "w"})) == -1);
    CHECK(dimension_projective(r, ppv(r, {"1"})) == -1);
    // twisted cubic is a curve
    CHECK(dimension_projective(r, ppv(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"})) == 1);
    // a smooth quadric surface in P3
    CHECK(dimension_projective(r, ppv(r, {"x*w - y*z"})) == 2);
}

TEST_CASE("jacobian smoothness detection") {
    Ring r = fp_ring({"x0", "x1", "x2", "x3", "x4"});
    Poly smooth = pp(r, "x0*x4 + x1*x3 + x2^2");
    CHECK(dimension_projective(r, jacobian_ideal(smooth)) == -1);
    Poly fermat = pp(r, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3");
    CHECK(dimension_projective(r, jacobian_ideal(fermat)) == -1);
    Poly cone = pp(r, "x0*x3 + x1*x2");  // singular at [0:0:0:0:1]
    CHECK(dimension_projective(r, jacobian_ideal(cone)) == 0);
}

TEST_CASE("rational coefficients groebner") {
    Ring r = q_ring({"x", "y", "z", "w"});
    std::vector<Poly> gb =
        groebner_ideal(r, ppv(r, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}));
    REQUIRE(gb.size() == 3);
    CHECK(p_str(gb[0]) == "z^2 - y*w");
    CHECK(p_str(gb[1]) == "y*z - x*w");
    CHECK(p_str(gb[2]) == "y^2 - x*z");
}
