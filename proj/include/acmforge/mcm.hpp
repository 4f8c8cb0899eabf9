#pragma once
#include <optional>

#include "acmforge/hilbert.hpp"
#include "acmforge/rng.hpp"

namespace acmforge {

// Pair of square matrices with phi * psi = psi * phi = f * identity, exactly.
// coker(phi) is the associated maximal Cohen-Macaulay module over S/(f).
struct MatrixFactorization {
    Poly f;
    GradedMatrix phi;  // F1 -> F0
    GradedMatrix psi;  // F0 twisted by deg f -> F1
    bool reduced = false;  // no unit entry in either factor
};

// rank of coker(phi) over S/(f), from the degree bookkeeping of the factors
int mf_rank(const MatrixFactorization& mf);

// Verify the defining laws: both products equal f * identity (exact), and
// det(phi) is a constant times f^rank. The determinant is expanded exactly up
// to size 8; larger sizes are checked at random points of the base field,
// which decides a polynomial identity of this degree over F_p beyond doubt.
void mf_check(const MatrixFactorization& mf, Rng* rng = nullptr);

// coker(phi) as a quotient-presented module
PresentedModule mf_module(const MatrixFactorization& mf);

// Minimal S-free presentation of a maximal Cohen-Macaulay quotient module,
// with the complementary factor solved entrywise. Requires pd_S = 1.
MatrixFactorization mf_extract(const PresentedModule& e);

// pd_S = 1 test for a quotient-presented module
bool is_mcm(const PresentedModule& e);

// multiplicity of the module divided by the multiplicity of the hypersurface;
// the module rank when the hypersurface is irreducible and the module is MCM
int module_rank(const PresentedModule& e);

bool hypersurface_smooth(const Poly& f);

// Constant fiber rank on the hypersurface, decided by minor ideals of the
// presentation: the generic-rank minors must cut out the empty set on X and
// the next-size minors must vanish on X. Returns the rank when locally free.
std::optional<int> fitting_locally_free(const PresentedModule& e);

struct SplitResult {
    bool fully_split = false;
    std::vector<int> line_twists;  // twists a of O(a) summands, ascending
    std::optional<MatrixFactorization> core;  // reduced remainder, absent when fully split
};

// Peel line-bundle summands off the matrix factorization of a quotient module
// by two-sided unit elimination, preserving both product laws at every step.
SplitResult split_detect(const PresentedModule& e);

// dimension of the degree-nu graded piece (= h^0 of the twisted sheaf for
// arithmetically Cohen-Macaulay modules)
long long h0_twist(const PresentedModule& e, int nu);

// saturated ideal defines an arithmetically Cohen-Macaulay subscheme:
// projective dimension of S/I equals its codimension
bool ideal_acm(const Ring& r, const std::vector<Poly>& saturated_ideal);

}  // namespace acmforge
