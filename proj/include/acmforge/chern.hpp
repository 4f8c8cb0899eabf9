#pragma once
#include "acmforge/mcm.hpp"

namespace acmforge {

// Chern degree data of a sheaf on a hypersurface X in P^4, degrees taken
// against the hyperplane class of the ambient space.
struct ChernData {
    int d = 0;  // hypersurface degree
    int rank = 0;
    long long deg_c1 = 0;
    long long deg_c2 = 0;
};

// Read the Chern degrees off the twists of a finite ambient resolution of the
// module. Exact rational arithmetic throughout; integrality is enforced.
ChernData chern_degrees(const Resolution& ambient_res, int d);

// resolve over S, then read off the twists
ChernData chern_of(const PresentedModule& e);

// closed form for a direct sum of line bundles O_X(a_i)
ChernData chern_split(int d, const std::vector<int>& twists);

// The first syzygy of the ideal's image in S/(f) that is maximal
// Cohen-Macaulay (one step when the subscheme is arithmetically
// Cohen-Macaulay).
PresentedModule mcm_syzygy_bundle(const Ring& r, const std::vector<Poly>& i_y, const Poly& f);

struct DivisibilityReport {
    long long deg_y = 0;
    long long deg_c2 = 0;
    int d = 0;
    int res_y_mod_d = 0;
    int res_c2_mod_d = 0;
    bool equivalent = false;
};

// deg Y and deg c2 of the associated syzygy bundle are divisible by d
// together or not at all; a one-sided divisibility is flagged as a broken
// invariant.
DivisibilityReport divisibility_report(const Ring& r, const std::vector<Poly>& i_y_saturated,
                                       const Poly& f);

}  // namespace acmforge
