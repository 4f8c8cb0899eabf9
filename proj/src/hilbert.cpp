#include "acmforge/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "acmforge/errors.hpp"

namespace acmforge {

namespace {

Zt zt_trim(Zt a) {
    std::size_t head = 0;
    while (head < a.c.size() && a.c[head] == 0) ++head;
    std::size_t tail = a.c.size();
    while (tail > head && a.c[tail - 1] == 0) --tail;
    if (head == tail) return Zt{};
    Zt out;
    out.low = a.low + static_cast<int>(head);
    out.c.assign(a.c.begin() + head, a.c.begin() + tail);
    return out;
}

}  // namespace

long long Zt::at(int d) const {
    if (c.empty() || d < low || d >= low + static_cast<int>(c.size())) return 0;
    return c[d - low];
}

Zt zt_const(long long a) { return zt_term(a, 0); }

Zt zt_term(long long a, int d) {
    if (a == 0) return Zt{};
    return Zt{d, {a}};
}

Zt zt_add(const Zt& a, const Zt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int low = std::min(a.low, b.low);
    int high = std::max(a.low + static_cast<int>(a.c.size()), b.low + static_cast<int>(b.c.size()));
    Zt out;
    out.low = low;
    out.c.assign(high - low, 0);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[a.low - low + k] += a.c[k];
    for (std::size_t k = 0; k < b.c.size(); ++k) out.c[b.low - low + k] += b.c[k];
    return zt_trim(std::move(out));
}

Zt zt_sub(const Zt& a, const Zt& b) {
    Zt nb = b;
    for (auto& x : nb.c) x = -x;
    return zt_add(a, nb);
}

Zt zt_mul(const Zt& a, const Zt& b) {
    if (a.is_zero() || b.is_zero()) return Zt{};
    Zt out;
    out.low = a.low + b.low;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return zt_trim(std::move(out));
}

bool zt_eq(const Zt& a, const Zt& b) { return zt_sub(a, b).is_zero(); }

long long zt_eval1(const Zt& a) {
    long long s = 0;
    for (long long x : a.c) s += x;
    return s;
}

Zt zt_div_one_minus_t(const Zt& a) {
    if (a.is_zero()) return a;
    // (1 - t) * q = a  <=>  q is the running partial-sum sequence of a
    Zt q;
    q.low = a.low;
    long long run = 0;
    for (long long x : a.c) {
        run += x;
        q.c.push_back(run);
    }
    ensure(q.c.back() == 0, "inexact division by 1 - t");
    q.c.pop_back();
    return zt_trim(std::move(q));
}

std::string zt_str(const Zt& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < a.c.size(); ++k) {
        long long v = a.c[k];
        if (v == 0) continue;
        int d = a.low + static_cast<int>(k);
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        long long mag = v < 0 ? -v : v;
        if (mag != 1 || d == 0) out << mag;
        if (d != 0) {
            if (mag != 1) out << "*";
            out << "t";
            if (d != 1) out << "^" << d;
        }
    }
    return out.str();
}

long long binomial(long long n, int k) {
    if (k < 0 || n < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

std::vector<Monomial> minimal_monomials(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.divides(m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

Zt numerator_rec(std::vector<Monomial> gens) {
    gens = minimal_monomials(std::move(gens));
    if (gens.empty()) return zt_const(1);
    if (gens.front().is_one()) return Zt{};

    // occurrence count per variable; pairwise coprimality means no variable
    // appears in two generators
    std::array<int, kMaxVars> occ{};
    for (const auto& m : gens)
        for (int v = 0; v < kMaxVars; ++v)
            if (m.e[v] > 0) ++occ[v];
    int pivot = -1;
    for (int v = 0; v < kMaxVars; ++v)
        if (occ[v] >= 2 && (pivot < 0 || occ[v] > occ[pivot])) pivot = v;

    if (pivot < 0) {
        Zt n = zt_const(1);
        for (const auto& m : gens) n = zt_mul(n, zt_sub(zt_const(1), zt_term(1, m.deg)));
        return n;
    }

    // N(I) = N(I + (x)) + t * N(I : x)
    std::vector<Monomial> plus = {Monomial::var(pivot, 1)};
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        if (m.e[pivot] == 0) plus.push_back(m);
        Monomial q = m;
        if (q.e[pivot] > 0) {
            --q.e[pivot];
            --q.deg;
        }
        colon.push_back(q);
    }
    return zt_add(numerator_rec(std::move(plus)),
                  zt_mul(zt_term(1, 1), numerator_rec(std::move(colon))));
}

}  // namespace

Zt numerator_of_monomial_ideal(std::vector<Monomial> gens) {
    return numerator_rec(std::move(gens));
}

HilbertData hilbert_of(const PresentedModule& m) {
    GBResult basis = submodule_basis(m.over, m.gens, m.rel.col, m.f);
    std::vector<std::vector<Monomial>> leads(m.gens.rank());
    for (const auto& v : basis.basis) {
        VecLead lt = *v_lead(v, basis.ord);
        leads[lt.comp].push_back(lt.term.m);
    }

    HilbertData h;
    h.nvars = m.ring->nvars();
    for (int i = 0; i < m.gens.rank(); ++i) {
        Zt ni = numerator_of_monomial_ideal(leads[i]);
        h.numerator = zt_add(h.numerator, zt_mul(zt_term(1, m.gens.degs[i]), ni));
    }
    if (h.numerator.is_zero()) return h;  // the zero module

    Zt red = h.numerator;
    int stripped = 0;
    while (zt_eval1(red) == 0) {
        red = zt_div_one_minus_t(red);
        ++stripped;
    }
    h.reduced = red;
    h.dim = h.nvars - stripped;
    h.degree = zt_eval1(red);
    return h;
}

long long hilbert_function(const HilbertData& h, int nu) {
    if (h.dim < 0) return 0;
    if (h.dim == 0) return h.reduced.at(nu);
    long long s = 0;
    for (std::size_t k = 0; k < h.reduced.c.size(); ++k) {
        int j = h.reduced.low + static_cast<int>(k);
        s += h.reduced.c[k] * binomial(static_cast<long long>(nu) - j + h.dim - 1, h.dim - 1);
    }
    return s;
}

Zt resolution_numerator(const Resolution& res) {
    Zt n;
    for (int k = 0; k <= res.length(); ++k) {
        for (int d : res.free_at(k).degs) {
            Zt t = zt_term(k % 2 == 0 ? 1 : -1, d);
            n = zt_add(n, t);
        }
    }
    return n;
}

}  // namespace acmforge
