#pragma once
#include <vector>

#include "acmforge/monomial.hpp"

namespace acmforge {

// Monomial orders. grevlex: higher degree wins; on ties the last nonzero
// entry of a-b being negative makes a larger. elim_first: exponent of var 0
// first (for eliminating a tag variable), ties broken by grevlex on the rest.
enum class MonoOrder { grevlex, lex, elim_first };

// returns +1 if a > b, 0 if equal, -1 if a < b
int mono_cmp(MonoOrder ord, const Monomial& a, const Monomial& b);

// Module term orders over a free module with a fixed basis e_0, e_1, ...
// top: monomial first, lower component breaks ties.
// pot: lower component first, monomial breaks ties.
// schreyer: compare m*lead[i] vs m'*lead[j] in the base order, lower index breaks ties.
enum class ModOrderKind { top, pot, schreyer };

struct ModOrder {
    ModOrderKind kind = ModOrderKind::top;
    MonoOrder base = MonoOrder::grevlex;
    std::vector<Monomial> schreyer_lead;  // only for kind == schreyer

    // returns +1 if (ci, a) > (cj, b)
    int cmp(int ci, const Monomial& a, int cj, const Monomial& b) const;
};

}  // namespace acmforge
