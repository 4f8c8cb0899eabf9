#include "acmforge/monomial.hpp"

#include "acmforge/order.hpp"

namespace acmforge {

namespace {

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 0; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

int elim_first_cmp(const Monomial& a, const Monomial& b) {
    if (a.e[0] != b.e[0]) return a.e[0] > b.e[0] ? 1 : -1;
    // grevlex on the remaining variables (var 0 exponents agree, so comparing
    // full degree and scanning down to slot 1 is equivalent)
    if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
    for (int i = kMaxVars - 1; i >= 1; --i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int mono_cmp(MonoOrder ord, const Monomial& a, const Monomial& b) {
    switch (ord) {
        case MonoOrder::grevlex: return grevlex_cmp(a, b);
        case MonoOrder::lex: return lex_cmp(a, b);
        case MonoOrder::elim_first: return elim_first_cmp(a, b);
    }
    return 0;
}

int ModOrder::cmp(int ci, const Monomial& a, int cj, const Monomial& b) const {
    switch (kind) {
        case ModOrderKind::top: {
            int c = mono_cmp(base, a, b);
            if (c != 0) return c;
            if (ci != cj) return ci < cj ? 1 : -1;
            return 0;
        }
        case ModOrderKind::pot: {
            if (ci != cj) return ci < cj ? 1 : -1;
            return mono_cmp(base, a, b);
        }
        case ModOrderKind::schreyer: {
            int c = mono_cmp(base, a.mul(schreyer_lead[ci]), b.mul(schreyer_lead[cj]));
            if (c != 0) return c;
            if (ci != cj) return ci < cj ? 1 : -1;
            return 0;
        }
    }
    return 0;
}

}  // namespace acmforge
