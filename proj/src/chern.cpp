#include "acmforge/chern.hpp"

#include <gmpxx.h>

#include "acmforge/hilbert.hpp"
#include "acmforge/idealops.hpp"

namespace acmforge {

namespace {

long long to_ll(const mpq_class& q, const char* what) {
    ensure(q.get_den() == 1, std::string(what) + " is not an integer");
    ensure(q.get_num().fits_slong_p(), std::string(what) + " overflows");
    return q.get_num().get_si();
}

}  // namespace

ChernData chern_degrees(const Resolution& res, int d) {
    require(d >= 1, "hypersurface degree must be positive");
    require(res.over == Over::ambient, "chern degrees need an ambient resolution");
    require(!res.truncated, "chern degrees need a finite resolution");
    require(res.ring->nvars() == 5, "chern degrees are implemented over five variables");

    // power sums of the twists, with alternating signs across the resolution
    long long e[4] = {0, 0, 0, 0};
    for (int k = 0; k <= res.length(); ++k) {
        long long sign = (k % 2 == 0) ? 1 : -1;
        for (int c : res.free_at(k).degs) {
            long long p = 1;
            for (int m = 0; m <= 3; ++m) {
                e[m] += sign * p;
                p *= c;
            }
        }
    }
    ensure(e[0] == 0, "resolution ranks do not cancel");

    auto q = [](long long v) { return mpq_class(static_cast<long>(v)); };
    mpq_class dd(d);
    mpq_class rank = q(-e[1]) / dd;
    mpq_class c1 = q(e[2]) / 2 + rank * dd * dd / 2;
    mpq_class c2 = c1 * c1 / (2 * dd) - c1 * dd / 2 + rank * dd * dd * dd / 6 + q(e[3]) / 6;

    ChernData out;
    out.d = d;
    long long r = to_ll(rank, "rank");
    ensure(r >= 0, "twist data gives a negative rank");
    out.rank = static_cast<int>(r);
    out.deg_c1 = to_ll(c1, "deg c1");
    out.deg_c2 = to_ll(c2, "deg c2");
    return out;
}

ChernData chern_of(const PresentedModule& e) {
    require(e.over == Over::quotient, "chern degrees are taken on a hypersurface");
    return chern_degrees(minimal_resolution_over_s(e), e.f.degree());
}

ChernData chern_split(int d, const std::vector<int>& twists) {
    require(d >= 1, "hypersurface degree must be positive");
    ChernData out;
    out.d = d;
    out.rank = static_cast<int>(twists.size());
    long long s1 = 0, s2 = 0;  // elementary symmetric sums
    for (size_t i = 0; i < twists.size(); ++i) {
        for (size_t j = i + 1; j < twists.size(); ++j) s2 += (long long)twists[i] * twists[j];
        s1 += twists[i];
    }
    out.deg_c1 = d * s1;
    out.deg_c2 = d * s2;
    return out;
}

PresentedModule mcm_syzygy_bundle(const Ring& r, const std::vector<Poly>& i_y, const Poly& f) {
    require(!f.is_zero() && f.degree() >= 1, "hypersurface equation must be nonconstant");
    require(ideal_member(f, r, groebner_ideal(r, i_y)), "the subscheme must lie on the hypersurface");

    PresentedModule m =
        present_submodule(Over::quotient, free_module(r, {0}), to_vec1(r, i_y), f);
    for (int step = 1; step <= 4; ++step) {
        require(m.rel.cols() > 0, "the ideal is free on the hypersurface, no bundle to extract");
        m = present_submodule(Over::quotient, m.gens, m.rel.col, f);
        if (is_mcm(m)) return m;
    }
    throw InvariantViolation("no maximal Cohen-Macaulay syzygy within four steps");
}

DivisibilityReport divisibility_report(const Ring& r, const std::vector<Poly>& i_y_saturated,
                                       const Poly& f) {
    int d = f.degree();
    HilbertData hy = hilbert_of(cyclic_module(Over::ambient, r, i_y_saturated));
    require(hy.dim == 2, "expected a curve (projective dimension one)");

    PresentedModule e = mcm_syzygy_bundle(r, i_y_saturated, f);
    ChernData cd = chern_of(e);

    DivisibilityReport rep;
    rep.deg_y = hy.degree;
    rep.deg_c2 = cd.deg_c2;
    rep.d = d;
    rep.res_y_mod_d = static_cast<int>(((rep.deg_y % d) + d) % d);
    rep.res_c2_mod_d = static_cast<int>(((rep.deg_c2 % d) + d) % d);
    rep.equivalent = (rep.res_y_mod_d == 0) == (rep.res_c2_mod_d == 0);
    ensure(rep.equivalent, "deg Y and deg c2 disagree about divisibility by d");
    return rep;
}

}  // namespace acmforge
