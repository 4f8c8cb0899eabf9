#pragma once
#include <memory>
#include <string>
#include <vector>

#include "acmforge/field.hpp"
#include "acmforge/monomial.hpp"
#include "acmforge/order.hpp"

namespace acmforge {

// A graded polynomial ring k[x_0..x_{n-1}] with a fixed monomial order.
// Rings are identified by pointer: every element remembers which ring it
// lives in, and operations across distinct rings are rejected.
struct RingRep {
    Field field;
    std::vector<std::string> vars;
    MonoOrder order;

    int nvars() const { return static_cast<int>(vars.size()); }
};

using Ring = std::shared_ptr<const RingRep>;

Ring make_ring(const Field& k, std::vector<std::string> vars,
               MonoOrder order = MonoOrder::grevlex);

// Ring with one extra elimination variable in front (slot 0); the original
// variables shift up by one. Used for ideal intersections via a tag variable.
Ring extend_with_tag(const Ring& r, const std::string& tag_name = "t#");

int var_index(const Ring& r, const std::string& name);

// All monomials of total degree d in the first nvars slots, grevlex-descending.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace acmforge
