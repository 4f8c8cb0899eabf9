#pragma once
#include <string>
#include <vector>

#include "acmforge/ring.hpp"

namespace acmforge {

struct Term {
    Monomial m;
    Scalar c;
};

// Polynomial with terms kept strictly descending in the ring's monomial order
// and all coefficients nonzero. A default-constructed Poly is a detached zero
// placeholder; every reachable polynomial carries its ring.
class Poly {
public:
    Poly() = default;
    explicit Poly(Ring r) : ring_(std::move(r)) {}
    Poly(Ring r, std::vector<Term> terms);  // canonicalizes: sort, merge, drop zeros

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    const Term& lead() const;
    int degree() const;  // -1 for the zero polynomial

    bool is_homogeneous() const;
    bool is_unit() const { return t_.size() == 1 && t_[0].m.is_one(); }

private:
    friend Poly p_raw(Ring r, std::vector<Term> sorted);
    Ring ring_;
    std::vector<Term> t_;
};

// construction without re-sorting; caller guarantees canonical form
Poly p_raw(Ring r, std::vector<Term> sorted);

bool same_ring(const Poly& a, const Poly& b);

Poly p_zero(const Ring& r);
Poly p_one(const Ring& r);
Poly p_const(const Ring& r, const Scalar& c);
Poly p_var(const Ring& r, int i, int power = 1);
Poly p_mono(const Ring& r, const Monomial& m, const Scalar& c);

Poly p_add(const Poly& a, const Poly& b);
Poly p_sub(const Poly& a, const Poly& b);
Poly p_neg(const Poly& a);
Poly p_mul(const Poly& a, const Poly& b);
Poly p_scale(const Poly& a, const Scalar& c);
Poly p_term_mul(const Poly& a, const Monomial& m, const Scalar& c);
Poly p_monic(const Poly& a);
bool p_eq(const Poly& a, const Poly& b);

// exact division a / b; throws InvariantViolation if b does not divide a
Poly p_div_exact(const Poly& a, const Poly& b);

Poly p_derivative(const Poly& a, int var);

// substitute vars[i] -> images[i]; images live in the target ring
Poly p_substitute(const Poly& a, const Ring& target, const std::vector<Poly>& images);

// move a into a ring whose variable block starts `shift` slots later
// (or earlier, for negative shift; shifted-out slots must be unused)
Poly p_shift_vars(const Poly& a, const Ring& target, int shift);

Scalar p_eval(const Poly& a, const std::vector<Scalar>& point);

std::string p_str(const Poly& a);
Poly p_parse(const Ring& r, const std::string& text);

Poly p_random_homog(const Ring& r, int deg, Rng& rng);

}  // namespace acmforge
