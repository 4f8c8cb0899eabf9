#pragma once
#include <vector>

#include "acmforge/module.hpp"

namespace acmforge {

// Reduced Groebner basis of a submodule of a graded free module: monic,
// tails fully reduced, sorted ascending by lead term. Canonical for a fixed
// ambient module and order.
struct GBResult {
    FreeModule amb;
    ModOrder ord;
    std::vector<Vec> basis;
};

GBResult groebner(const FreeModule& amb, const std::vector<Vec>& gens,
                  ModOrderKind mk = ModOrderKind::top);

// Full normal form of v against the basis. With `coeffs`, also returns q with
// v = sum q[k] * basis[k] + remainder.
Vec normal_form(const Vec& v, const GBResult& gb, std::vector<Poly>* coeffs = nullptr);

// Generators of the syzygy module of `gens` (not required to be a GB):
// all w with sum w[l] * gens[l] = 0, as elements of a free module on the
// inputs. S-pair reduction transcripts plus the rewriting relations of the
// inputs against the computed basis.
std::vector<Vec> syzygy_module(const FreeModule& amb, const std::vector<Vec>& gens);

// Basis with rewrite transcripts over the original generators, for solving
// explicit membership equations.
struct TrackedBasis {
    FreeModule amb;
    ModOrder ord;
    FreeModule inputs;       // free module on the original generators
    std::vector<Vec> basis;  // raw Buchberger output, not reduced
    std::vector<VecLead> leads;
    std::vector<Vec> rep;    // basis[t] = sum rep[t][l] * gens[l]
};

TrackedBasis tracked_groebner(const FreeModule& amb, const std::vector<Vec>& gens);

// coefficients x with sum x[l] * gens[l] = v, when v lies in the submodule
std::optional<std::vector<Poly>> solve_in(const TrackedBasis& tb, const Vec& v);

// ideal-level conveniences (rank-one module)
std::vector<Poly> groebner_ideal(const Ring& r, const std::vector<Poly>& gens);
Poly nf_poly(const Poly& p, const Ring& r, const std::vector<Poly>& gb);
bool ideal_member(const Poly& p, const Ring& r, const std::vector<Poly>& gb);
bool ideal_equal(const Ring& r, const std::vector<Poly>& gb_a, const std::vector<Poly>& gb_b);

FreeModule free_module(const Ring& r, std::vector<int> degs);
Vec to_vec1(const Poly& p);
std::vector<Vec> to_vec1(const Ring& r, const std::vector<Poly>& ps);

}  // namespace acmforge
