#pragma once
#include <vector>

#include "acmforge/groebner.hpp"

namespace acmforge {

// I cap J by tag-variable elimination in S[t]: eliminate t from t*I + (1-t)*J.
std::vector<Poly> ideal_intersect(const Ring& r, const std::vector<Poly>& gens_i,
                                  const std::vector<Poly>& gens_j);

// Same intersection through syzygies of the concatenated row [I | J];
// independent of the elimination route, used to cross-check it.
std::vector<Poly> ideal_intersect_syz(const Ring& r, const std::vector<Poly>& gens_i,
                                      const std::vector<Poly>& gens_j);

// I : g and I : J (quotients), computed from intersections.
std::vector<Poly> ideal_colon(const Ring& r, const std::vector<Poly>& gens_i, const Poly& g);
std::vector<Poly> ideal_colon(const Ring& r, const std::vector<Poly>& gens_i,
                              const std::vector<Poly>& gens_j);

// I : J^infinity, by iterating the colon until the reduced GB stabilizes.
std::vector<Poly> ideal_saturate(const Ring& r, const std::vector<Poly>& gens_i,
                                 const std::vector<Poly>& gens_j);

// Dimension of Proj(S/I): Krull dimension of S/in(I) minus one; -1 when empty.
int dimension_projective(const Ring& r, const std::vector<Poly>& gens);

// Partials of f (plus f itself); Proj V(jacobian) empty <=> V(f) smooth.
std::vector<Poly> jacobian_ideal(const Poly& f);

// sum of ideals, normalized to a reduced GB
std::vector<Poly> ideal_sum(const Ring& r, const std::vector<Poly>& a,
                            const std::vector<Poly>& b);

std::vector<Poly> irrelevant_ideal(const Ring& r);

}  // namespace acmforge
