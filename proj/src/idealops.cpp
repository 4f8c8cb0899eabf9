#include "acmforge/idealops.hpp"

#include <algorithm>

namespace acmforge {

std::vector<Poly> ideal_intersect(const Ring& r, const std::vector<Poly>& gens_i,
                                  const std::vector<Poly>& gens_j) {
    Ring ext = extend_with_tag(r);
    Poly t = p_var(ext, 0);
    Poly one_minus_t = p_sub(p_one(ext), t);
    std::vector<Poly> gens;
    for (const auto& g : gens_i) gens.push_back(p_mul(t, p_shift_vars(g, ext, 1)));
    for (const auto& g : gens_j) gens.push_back(p_mul(one_minus_t, p_shift_vars(g, ext, 1)));
    std::vector<Poly> out;
    for (const auto& g : groebner_ideal(ext, gens)) {
        bool tag_free = true;
        for (const auto& tm : g.terms())
            if (tm.m.e[0] != 0) {
                tag_free = false;
                break;
            }
        if (tag_free) out.push_back(p_shift_vars(g, r, -1));
    }
    return groebner_ideal(r, out);
}

std::vector<Poly> ideal_intersect_syz(const Ring& r, const std::vector<Poly>& gens_i,
                                      const std::vector<Poly>& gens_j) {
    // a syzygy (c | d) of the row [gens_i | gens_j] has c . gens_i = -d . gens_j,
    // an element of the intersection; these span it
    std::vector<Poly> all = gens_i;
    all.insert(all.end(), gens_j.begin(), gens_j.end());
    FreeModule amb = free_module(r, {0});
    std::vector<Vec> syz = syzygy_module(amb, to_vec1(r, all));
    std::vector<Poly> out;
    for (const auto& w : syz) {
        Poly e(r);
        for (std::size_t l = 0; l < gens_i.size(); ++l) e = p_add(e, p_mul(w[static_cast<int>(l)], gens_i[l]));
        if (!e.is_zero()) out.push_back(e);
    }
    return groebner_ideal(r, out);
}

std::vector<Poly> ideal_colon(const Ring& r, const std::vector<Poly>& gens_i, const Poly& g) {
    require(!g.is_zero(), "colon by zero");
    std::vector<Poly> meet = ideal_intersect(r, gens_i, {g});
    std::vector<Poly> out;
    for (const auto& h : meet) out.push_back(p_div_exact(h, g));
    return groebner_ideal(r, out);
}

std::vector<Poly> ideal_colon(const Ring& r, const std::vector<Poly>& gens_i,
                              const std::vector<Poly>& gens_j) {
    require(!gens_j.empty(), "colon by the zero ideal");
    std::vector<Poly> acc;
    bool started = false;
    for (const auto& g : gens_j) {
        if (g.is_zero()) continue;
        std::vector<Poly> q = ideal_colon(r, gens_i, g);
        if (!started) {
            acc = std::move(q);
            started = true;
        } else {
            acc = ideal_intersect(r, acc, q);
        }
    }
    require(started, "colon by the zero ideal");
    return acc;
}

std::vector<Poly> ideal_saturate(const Ring& r, const std::vector<Poly>& gens_i,
                                 const std::vector<Poly>& gens_j) {
    std::vector<Poly> cur = groebner_ideal(r, gens_i);
    for (;;) {
        std::vector<Poly> next = ideal_colon(r, cur, gens_j);
        if (ideal_equal(r, cur, next)) return cur;
        cur = std::move(next);
    }
}

int dimension_projective(const Ring& r, const std::vector<Poly>& gens) {
    std::vector<Poly> gb = groebner_ideal(r, gens);
    int n = r->nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        std::uint32_t s = 0;
        for (int i = 0; i < n; ++i)
            if (g.lead().m.e[i]) s |= 1u << i;
        if (s == 0) return -1;  // unit ideal
        supports.push_back(s);
    }
    // Krull dim of S/in(I) = largest variable subset containing no lead support
    int best = 0;
    for (std::uint32_t sigma = 0; sigma < (1u << n); ++sigma) {
        bool independent = true;
        for (std::uint32_t s : supports)
            if ((s & ~sigma) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(sigma));
    }
    return best - 1;
}

std::vector<Poly> jacobian_ideal(const Poly& f) {
    const Ring& r = f.ring();
    std::vector<Poly> gens{f};
    for (int i = 0; i < r->nvars(); ++i) gens.push_back(p_derivative(f, i));
    return gens;
}

std::vector<Poly> ideal_sum(const Ring& r, const std::vector<Poly>& a,
                            const std::vector<Poly>& b) {
    std::vector<Poly> gens = a;
    gens.insert(gens.end(), b.begin(), b.end());
    return groebner_ideal(r, gens);
}

std::vector<Poly> irrelevant_ideal(const Ring& r) {
    std::vector<Poly> out;
    for (int i = 0; i < r->nvars(); ++i) out.push_back(p_var(r, i));
    return out;
}

}  // namespace acmforge
