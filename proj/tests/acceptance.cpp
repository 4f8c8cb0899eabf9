// Acceptance gate: drives the full pipeline end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "acmforge/chern.hpp"
#include "acmforge/constructions.hpp"
#include "acmforge/idealops.hpp"
#include "helpers.hpp"

using namespace acmforge;
using namespace acmforge::testing;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string num(long long v) { return std::to_string(v); }

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

struct Shared {
    Ring r = fp_ring({"x0", "x1", "x2", "x3", "x4"});
    std::vector<std::pair<std::vector<Poly>, Poly>> ys;  // (saturated I_Y, f)
    int eulers_checked = 0;
};

// alternating twist count of the minimal S-resolution == hilbert numerator;
// applied to every module this suite resolves directly
void check_euler(Shared& st, const PresentedModule& m) {
    Resolution rs = minimal_resolution_over_s(m);
    check(zt_eq(resolution_numerator(rs), hilbert_of(m).numerator),
          "resolution numerator differs from the hilbert numerator");
    ++st.eulers_checked;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<Poly> plane_union_ideal(const Ring& r) {
    return {p_parse(r, "x0*x2"), p_parse(r, "x0*x3"), p_parse(r, "x1*x2"),
            p_parse(r, "x1*x3")};
}

PresentedModule free_pencil(const Ring& r, const Poly& f) {
    FreeModule g = free_module(r, {1, 1});
    return make_presented(Over::quotient, g, zero_matrix(g, free_module(r, {})), f);
}

PresentedModule spinor_type(const Ring& r, const Poly& f) {
    return mcm_syzygy_bundle(r, {p_var(r, 0), p_var(r, 1), p_var(r, 2)}, f);
}

std::string c1_resolution_shape(Shared& st) {
    PresentedModule m = present_submodule(Over::ambient, free_module(st.r, {0}),
                                          to_vec1(st.r, plane_union_ideal(st.r)), Poly());
    Resolution res = minimal_resolution(m);
    check(sorted(res.f0.degs) == std::vector<int>{2, 2, 2, 2},
          "F0 twists are " + join_ints(res.f0.degs) + ", expected 2 2 2 2");
    check(res.length() == 2, "length " + num(res.length()) + ", expected 2");
    check(sorted(res.diff[0].src.degs) == std::vector<int>{3, 3, 3, 3},
          "F1 twists are " + join_ints(res.diff[0].src.degs) + ", expected 3 3 3 3");
    check(sorted(res.diff[1].src.degs) == std::vector<int>{4},
          "F2 twists are " + join_ints(res.diff[1].src.degs) + ", expected 4");
    check_euler(st, m);
    return "0 -> S(-4) -> S(-3)^4 -> S(-2)^4 -> I, exact twists";
}

std::string c2_section_counts(Shared& st) {
    const Ring& r = st.r;
    VoisinConfig v2 = voisin_build_with(r, voisin_default_f(r, 2));
    check(v2.smooth, "canonical quadric reported singular");
    long long h2 = h0_twist(v2.g, 2);
    long long h3 = h0_twist(v2.g, 3);
    // the same syzygy construction applied to the unsaturated ideal, for the
    // diagnostic below
    PresentedModule m0z = present_submodule(Over::quotient, free_module(r, {0}),
                                            to_vec1(r, v2.i_sigma), v2.f);
    PresentedModule gz = present_submodule(Over::quotient, m0z.gens, m0z.rel.col, v2.f);
    long long z3 = h0_twist(gz, 3);

    VoisinConfig v3 = voisin_build_with(r, voisin_default_f(r, 3));
    check(v3.cert.acm && !v3.cert.split,
          "cubic verdicts: acm " + std::string(v3.cert.acm ? "yes" : "no") + ", split " +
              (v3.cert.split ? "yes" : "no"));
    long long g32 = h0_twist(v3.g, 2);
    long long g33 = h0_twist(v3.g, 3);
    check(g32 == 0 && g33 == 4, "cubic golden section counts expected (0, 4), got (" +
                                    num(g32) + ", " + num(g33) + ")");

    check(h2 == 0, "quadric h0_twist(G,2) = " + num(h2) + ", expected 0");
    check(h3 == 4, "quadric h0_twist(G,2) = 0 holds, but h0_twist(G,3) = " + num(h3) +
                       " where 4 is asserted; the bundle of the unsaturated ideal (point "
                       "not removed) gives exactly " + num(z3) +
                       "; cubic verdicts and its (0, 4) counts all hold");
    return "quadric (0, 4) and cubic golden (0, 4) section counts";
}

std::string c3_certificates(Shared& st) {
    const Ring& r = st.r;
    for (int d : {2, 3}) {
        VoisinConfig v = voisin_build_with(r, voisin_default_f(r, d));
        check(ideal_acm(r, v.i_y), "d = " + num(d) + ": residual curve is not acm");
        PresentedModule cy = cyclic_module(Over::ambient, r, v.i_y);
        int pd = projective_dimension_s(cy);
        check(pd == 3, "d = " + num(d) + ": pd of S/I_Y is " + num(pd) + ", expected 3");
        SplitResult s = split_detect(v.g);
        check(!s.fully_split, "d = " + num(d) + ": bundle splits into line bundles");
        st.ys.push_back({v.i_y, v.f});
        check_euler(st, cy);
    }
    return "acm yes (pd 3) and non-split for d = 2, 3";
}

std::string c4_factorization_laws(Shared& st) {
    const Ring& r = st.r;
    Poly f2 = voisin_default_f(r, 2);
    Rng rng(4);
    int checked = 0;
    auto run_mf = [&](const PresentedModule& e, const char* which) {
        MatrixFactorization mf = mf_extract(e);
        try {
            mf_check(mf, &rng);
        } catch (const ForgeError& err) {
            throw Failure(std::string(which) + ": " + err.what());
        }
        ++checked;
        return mf;
    };
    MatrixFactorization free_mf = run_mf(free_pencil(r, f2), "free module");
    check(free_mf.phi.rows() == 2, "free module factorization size is not 2");
    run_mf(spinor_type(r, f2), "spinor-type bundle");
    run_mf(voisin_build_with(r, f2).g, "residual bundle, d = 2");
    run_mf(voisin_build_with(r, voisin_default_f(r, 3)).g, "residual bundle, d = 3");

    LinspaceResult l3 = linear_space_bundle(r, f2, {p_var(r, 1), p_var(r, 2),
                                                    p_var(r, 3), p_var(r, 4)});
    LinspaceResult l4 = linear_space_bundle(r, f2, irrelevant_ideal(r));
    check(l3.split.core.has_value() && l4.split.core.has_value(),
          "linear-section bundles lost their factorization cores");
    mf_check(*l3.split.core, &rng);
    ++checked;
    check(l4.split.core->phi.rows() == 16,
          "empty-section core size is " + num(l4.split.core->phi.rows()) + ", expected 16");
    mf_check(*l4.split.core, &rng);  // size > 8: random-specialization determinant path
    ++checked;
    return num(checked) + " factorizations: products f*I and determinant law, both sizes";
}

std::string c5_linear_sections(Shared& st) {
    const Ring& r = st.r;
    Poly f2 = voisin_default_f(r, 2);
    LinspaceResult l3 = linear_space_bundle(r, f2, {p_var(r, 1), p_var(r, 2),
                                                    p_var(r, 3), p_var(r, 4)});
    check(l3.r == 3, "point section has r = " + num(l3.r) + ", expected 3");
    check(l3.mcm, "point section kernel is not maximal cohen-macaulay");
    check(!l3.split.fully_split, "point section kernel splits");
    LinspaceResult l4 = linear_space_bundle(r, f2, irrelevant_ideal(r));
    check(l4.r == 4, "empty section has r = " + num(l4.r) + ", expected 4");
    check(l4.mcm, "empty section kernel is not maximal cohen-macaulay");
    check(!l4.split.fully_split, "empty section kernel splits");
    return "point (r = 3) and empty (r = 4) kernels are acm and non-split";
}

std::string c6_dependency_loci(Shared& st) {
    const Ring& r = st.r;
    Poly f2 = voisin_default_f(r, 2);
    PresentedModule pencil = free_pencil(r, f2);
    PresentedModule spinor = spinor_type(r, f2);
    const std::string q2_neg = "no pure codimension-two subvariety S of P^n has X cap S = Y";
    const std::string q3_neg = "the conormal sequence of Y in X does not split";

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        KleimanResult kr = kleiman_locus(pencil, {}, seed);
        check(dimension_projective(r, kr.i_y) == 1,
              "pencil seed " + num(seed) + ": locus is not a curve");
        check(!kr.i_s.empty(), "pencil seed " + num(seed) + ": no determinantal witness");
        auto glued = ideal_saturate(r, ideal_sum(r, kr.i_s, {f2}), irrelevant_ideal(r));
        check(ideal_equal(r, groebner_ideal(r, kr.i_y), glued),
              "pencil seed " + num(seed) + ": I_Y != saturate(I_S + (f))");
        st.ys.push_back({kr.i_y, f2});
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        KleimanResult kr = kleiman_locus(spinor, {}, seed);
        check(dimension_projective(r, kr.i_y) == 1,
              "spinor seed " + num(seed) + ": locus is not a curve");
        check(kr.acm, "spinor seed " + num(seed) + ": locus is not acm");
        check(kr.cert.q2 == q2_neg && kr.cert.q3 == q3_neg,
              "spinor seed " + num(seed) + ": negative certificates missing");
        st.ys.push_back({kr.i_y, f2});
    }
    auto snapshot = [&](const KleimanResult& kr) {
        std::ostringstream out;
        for (const auto& p : kr.i_y) out << p_str(p) << ";";
        out << "|";
        for (const auto& p : kr.i_s) out << p_str(p) << ";";
        return out.str();
    };
    for (std::uint64_t seed : {0ull, 7ull, 19ull}) {
        check(snapshot(kleiman_locus(pencil, {}, seed)) ==
                  snapshot(kleiman_locus(pencil, {}, seed)),
              "pencil seed " + num(seed) + ": rerun differs");
        check(snapshot(kleiman_locus(spinor, {}, seed)) ==
                  snapshot(kleiman_locus(spinor, {}, seed)),
              "spinor seed " + num(seed) + ": rerun differs");
    }
    return "40 seeded loci: witness identity, certificates, deterministic reruns";
}

std::string c7_divisibility(Shared& st) {
    check(!st.ys.empty(), "no subschemes were collected by earlier criteria");
    for (const auto& [iy, f] : st.ys) {
        DivisibilityReport rep = divisibility_report(st.r, iy, f);
        check(rep.equivalent, "one-sided divisibility at deg Y = " + num(rep.deg_y) +
                                  ", deg c2 = " + num(rep.deg_c2));
        check((rep.deg_y % rep.d == 0) == (rep.res_y_mod_d == 0),
              "reported residue disagrees with deg Y");
        check((rep.deg_c2 % rep.d == 0) == (rep.res_c2_mod_d == 0),
              "reported residue disagrees with deg c2");
        check_euler(st, cyclic_module(Over::ambient, st.r, iy));
    }
    return num(st.ys.size()) + " subschemes: deg Y and deg c2 divisibility agree";
}

std::string c8_oracle_locks(Shared& st) {
    const Ring& r = st.r;
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 2 + trial % 3;
        Poly fd = p_zero(r);
        for (int i = 0; i < 5; ++i) fd = p_add(fd, p_var(r, i, d));
        int k = 1 + static_cast<int>(rng.below(5));
        std::vector<int> tw;
        for (int i = 0; i < k; ++i) tw.push_back(-6 + static_cast<int>(rng.below(13)));
        std::sort(tw.begin(), tw.end());
        std::vector<int> degs;
        for (int a : tw) degs.push_back(-a);
        FreeModule g = free_module(r, degs);
        PresentedModule m =
            make_presented(Over::quotient, g, zero_matrix(g, free_module(r, {})), fd);
        ChernData got = chern_of(m);
        ChernData want = chern_split(d, tw);
        check(got.d == want.d && got.rank == want.rank && got.deg_c1 == want.deg_c1 &&
                  got.deg_c2 == want.deg_c2,
              "trial " + num(trial) + ": resolution chern data (" + num(got.deg_c1) + ", " +
                  num(got.deg_c2) + ") differs from the closed form (" + num(want.deg_c1) +
                  ", " + num(want.deg_c2) + ")");
    }

    for (int trial = 0; trial < 20; ++trial) {
        int ngens = 3 + static_cast<int>(rng.below(4));
        std::vector<Monomial> mono;
        std::vector<Poly> gens;
        for (int g = 0; g < ngens; ++g) {
            int deg = 1 + static_cast<int>(rng.below(4));
            Monomial m = Monomial::one();
            for (int e = 0; e < deg; ++e)
                m = m.mul(Monomial::var(static_cast<int>(rng.below(5))));
            mono.push_back(m);
            gens.push_back(p_mono(r, m, r->field.from_int(1)));
        }
        PresentedModule cy = cyclic_module(Over::ambient, r, gens);
        HilbertData h = hilbert_of(cy);
        for (int nu = 0; nu <= 10; ++nu) {
            long long brute = 0;
            for (const Monomial& cand : monomials_of_degree(5, nu)) {
                bool hit = false;
                for (const Monomial& g : mono)
                    if (g.divides(cand)) {
                        hit = true;
                        break;
                    }
                if (!hit) ++brute;
            }
            check(hilbert_function(h, nu) == brute,
                  "trial " + num(trial) + ", degree " + num(nu) + ": series gives " +
                      num(hilbert_function(h, nu)) + ", direct count gives " + num(brute));
        }
        check_euler(st, cy);
    }
    return "50 split multisets, 20 monomial ideals x degrees 0..10, " +
           num(st.eulers_checked) + " euler identities";
}

}  // namespace

int main() {
    std::cout << "acceptance: exact arithmetic over F_" << kDefaultPrime << "\n";
    Shared st;
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds; 0 = no budget
        std::function<std::string(Shared&)> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "plane-union ideal resolution shape", 10, c1_resolution_shape},
        {2, "residual-curve bundle section counts", 60, c2_section_counts},
        {3, "acm and non-split certificates", 240, c3_certificates},
        {4, "matrix factorization laws", 0, c4_factorization_laws},
        {5, "linear-section syzygy bundles", 120, c5_linear_sections},
        {6, "seeded dependency-locus soundness", 600, c6_dependency_loci},
        {7, "degree divisibility equivalence", 0, c7_divisibility},
        {8, "oracle locks", 0, c8_oracle_locks},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict;
        std::string detail;
        try {
            detail = c.body(st);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                              .count();
            if (c.budget > 0 && secs > c.budget) {
                verdict = "FAIL";
                detail = "over budget: " + std::to_string(secs) + "s > " +
                         std::to_string(c.budget) + "s";
            } else {
                verdict = "PASS";
            }
        } catch (const std::exception& e) {
            verdict = "FAIL";
            detail = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (verdict == "FAIL") ++failed;
        std::cout << "criterion " << c.id << ": " << verdict << " (" << std::fixed
                  << std::setprecision(1) << secs << "s) " << c.name << " -- " << detail
                  << "\n";
    }
    std::cout << "summary: " << (criteria.size() - failed) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
