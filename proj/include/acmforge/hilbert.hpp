#pragma once
#include <string>
#include <vector>

#include "acmforge/resolution.hpp"

namespace acmforge {

// integer Laurent polynomial in one variable t
struct Zt {
    int low = 0;
    std::vector<long long> c;  // c[k] is the coefficient of t^(low + k); empty = 0

    bool is_zero() const { return c.empty(); }
    long long at(int d) const;
};

Zt zt_const(long long a);
Zt zt_term(long long a, int d);
Zt zt_add(const Zt& a, const Zt& b);
Zt zt_sub(const Zt& a, const Zt& b);
Zt zt_mul(const Zt& a, const Zt& b);
bool zt_eq(const Zt& a, const Zt& b);
long long zt_eval1(const Zt& a);
Zt zt_div_one_minus_t(const Zt& a);  // exact division by (1 - t)
std::string zt_str(const Zt& a);

long long binomial(long long n, int k);  // 0 outside the usual range

// Numerator of the Hilbert series of S/(monomial ideal): series = N / (1-t)^nvars.
Zt numerator_of_monomial_ideal(std::vector<Monomial> gens);

struct HilbertData {
    int nvars = 0;
    Zt numerator;          // Hilbert series = numerator / (1-t)^nvars
    Zt reduced;            // numerator with every (1-t) factor removed
    int dim = -1;          // Krull dimension; -1 for the zero module
    long long degree = 0;  // reduced numerator evaluated at t = 1
};

// Hilbert data of a presented module, via the lead module of its relations.
// Quotient presentations count the same underlying graded vector space.
HilbertData hilbert_of(const PresentedModule& m);

// dimension of the degree-nu graded piece
long long hilbert_function(const HilbertData& h, int nu);

// Alternating sum of twist contributions of a resolution's free modules; for a
// finite resolution over the polynomial ring it equals the Hilbert numerator.
Zt resolution_numerator(const Resolution& res);

}  // namespace acmforge
