#pragma once
#include <cstdint>
#include <string>

#include "acmforge/mcm.hpp"

namespace acmforge {

// Machine-checkable verdict record for a subscheme Y of the hypersurface X
// and the syzygy bundle G attached to it. Negative verdicts are only ever
// derived from a non-split G together with ACM-ness of Y.
struct QuestionCertificate {
    bool acm = false;               // Y arithmetically Cohen-Macaulay
    bool split = false;             // G a sum of line bundles
    std::vector<int> line_twists;   // twists peeled off G, ascending
    int core_size = 0;              // size of the reduced factorization core
    std::string q2;                 // can Y be X cap S for a pure codim-2 S in P^n?
    std::string q3;                 // can the conormal sequence of Y in X split?
    std::vector<std::string> chain; // rules applied, in order
    std::string caveat;             // field-of-computation note
};

QuestionCertificate question_certificate(const PresentedModule& g, bool subscheme_acm);

// Two fixed planes V(x0,x1) and V(x2,x3) meeting at p = [0:0:0:0:1], cut by a
// degree-d hypersurface through p: the residual curve Y (embedded point at p
// removed by saturation) and the first syzygy bundle G of its ideal on X.
struct VoisinConfig {
    Ring ring;
    Poly f;
    int d = 0;
    bool smooth = false;
    std::vector<Poly> i_sigma;     // ideal of the plane union
    std::vector<Poly> i_z;         // i_sigma + (f)
    std::vector<Poly> i_y;         // i_z saturated at the point's ideal
    std::vector<int> gen_degrees;  // minimal generator degrees of the ideal on X
    PresentedModule g;
    QuestionCertificate cert;
};

// random smooth hypersurface through p, resampled up to `retries` times
VoisinConfig voisin_build(int d, std::uint64_t seed, int retries = 5);

// explicit hypersurface; smoothness recorded, not required
VoisinConfig voisin_build_with(const Ring& r, const Poly& f);

// canonical smooth fixture through p for each degree
Poly voisin_default_f(const Ring& r, int d);

// Linear space L inside X of codimension r (a point, or empty = the whole
// variable ideal): the kernel of a free presentation of I(L) of length r-2,
// an ACM bundle that is not a sum of line bundles for d >= 2.
struct LinspaceResult {
    int r = 0;  // codimension of L in X
    PresentedModule m;
    bool mcm = false;
    SplitResult split;
    std::string caveat;
};

LinspaceResult linear_space_bundle(const Ring& ring, const Poly& f,
                                   const std::vector<Poly>& linear_forms);

// Dependency locus of a seeded random map G -> (+) S_X(m_i), with rank G + 1
// twists: a codimension-two subscheme Y of X whose ideal is recovered through
// the dual of the cokernel and cross-checked against the minor ideal of the
// sampled map. Twists escalate by one on failure, up to `retries`.
struct KleimanResult {
    std::vector<Poly> i_y;   // saturated ambient ideal of Y
    std::vector<Poly> i_s;   // ambient minor (determinantal) ideal of the map
    std::vector<int> twists; // twists actually used
    int retries_used = 0;
    long long deg_y = 0;
    bool acm = false;
    QuestionCertificate cert;
};

KleimanResult kleiman_locus(const PresentedModule& g, std::vector<int> twists,
                            std::uint64_t seed, int retries = 5);

std::vector<int> kleiman_default_twists(const PresentedModule& g);

}  // namespace acmforge
