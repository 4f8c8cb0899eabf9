#pragma once
#include <map>
#include <string>

#include "acmforge/groebner.hpp"

namespace acmforge {

// Which ring a module lives over: the ambient polynomial ring S, or the
// hypersurface coordinate ring S/(f). In the quotient case every vector of
// polynomials stands for its class mod f.
enum class Over { ambient, quotient };

// Finitely presented graded module: coker(rel: F1 -> gens).
struct PresentedModule {
    Over over = Over::ambient;
    Ring ring;
    Poly f;  // the hypersurface equation; set iff over == quotient
    FreeModule gens;
    GradedMatrix rel;
};

PresentedModule make_presented(Over over, FreeModule gens, GradedMatrix rel, Poly f = Poly());

// Quotient ring S/I as a presented module (gens = single degree-0 generator).
PresentedModule cyclic_module(Over over, const Ring& r, const std::vector<Poly>& ideal_gens,
                              const Poly& f = Poly());

// Minimal presentation of the submodule of `amb` generated by `gens`:
// generators trimmed to a minimal set, relations trimmed likewise.
PresentedModule present_submodule(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                                  const Poly& f = Poly());

// --- submodule-level operations, shared by resolutions and certification ---

// Generators of the syzygy module of `gens` inside `amb`, over S (f unset)
// or over S/(f): in the quotient case f * e_i columns are adjoined over S and
// the result is projected back and reduced mod f.
std::vector<Vec> relations_of(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                              const Poly& f);

// Reduced GB of the submodule (with f * e_i adjoined in the quotient case).
GBResult submodule_basis(Over over, const FreeModule& amb, const std::vector<Vec>& gens,
                         const Poly& f);

bool submodule_member(const Vec& v, const GBResult& basis);

// Minimal homogeneous generating set: ascending-degree greedy, dropping any
// vector contained in the span of those already kept.
std::vector<Vec> trim_generators(Over over, const FreeModule& amb, std::vector<Vec> gens,
                                 const Poly& f);

// entry-wise normal form mod f
Vec reduce_mod_f(const Vec& v, const Poly& f);

// --- resolutions ---

struct Resolution {
    Over over = Over::ambient;
    Ring ring;
    Poly f;
    FreeModule f0;
    std::vector<GradedMatrix> diff;  // diff[k]: F_{k+1} -> F_k
    bool truncated = false;          // quotient resolution cut at max_length
    bool periodic = false;           // tail repeats with a degree shift
    int period_shift = 0;

    int length() const { return static_cast<int>(diff.size()); }
    const FreeModule& free_at(int k) const { return k == 0 ? f0 : diff[k - 1].src; }
};

// Minimal graded free resolution of a presented module. Over S it runs to
// completion (finite by the syzygy theorem); over S/(f) it stops after
// max_length differentials and flags truncation.
Resolution minimal_resolution(const PresentedModule& m, int max_length = 4);

// Resolution of the same underlying module as an S-module (quotient-presented
// input gets f * identity adjoined to its relations).
Resolution minimal_resolution_over_s(const PresentedModule& m);

// projective dimension over S (length of the minimal S-resolution)
int projective_dimension_s(const PresentedModule& m);

// Minimal presentation: strip unit entries of rel via Schur complement steps
// and drop the corresponding generator/relation pairs.
PresentedModule minimalize(const PresentedModule& m);

struct BettiTable {
    Over over = Over::ambient;
    bool truncated = false;
    bool periodic = false;
    std::map<std::pair<int, int>, long> beta;  // (homological i, internal j) -> count
};

BettiTable betti_of(const Resolution& res);
std::string betti_grid(const BettiTable& b);   // text table, rows j-i, columns i
std::string betti_json(const BettiTable& b);   // entries sorted by (i, j)

}  // namespace acmforge
