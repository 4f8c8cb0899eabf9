#pragma once
#include <string>
#include <vector>

#include "acmforge/groebner.hpp"
#include "acmforge/idealops.hpp"

namespace acmforge::testing {

inline Ring fp_ring(std::vector<std::string> vars, std::uint64_t p = kDefaultPrime) {
    return make_ring(Field::prime(p), std::move(vars));
}

inline Ring q_ring(std::vector<std::string> vars) {
    return make_ring(Field::rationals(), std::move(vars));
}

inline Poly pp(const Ring& r, const std::string& s) { return p_parse(r, s); }

inline std::vector<Poly> ppv(const Ring& r, const std::vector<std::string>& ss) {
    std::vector<Poly> out;
    for (const auto& s : ss) out.push_back(p_parse(r, s));
    return out;
}

inline bool module_contains(const FreeModule& amb, const std::vector<Vec>& gens,
                            const Vec& v) {
    GBResult gb = groebner(amb, gens);
    return normal_form(v, gb).is_zero();
}

inline bool module_equal(const FreeModule& amb, const std::vector<Vec>& a,
                         const std::vector<Vec>& b) {
    GBResult ga = groebner(amb, a);
    GBResult gbb = groebner(amb, b);
    for (const auto& v : b)
        if (!normal_form(v, ga).is_zero()) return false;
    for (const auto& v : a)
        if (!normal_form(v, gbb).is_zero()) return false;
    return true;
}

inline bool ideal_same(const Ring& r, const std::vector<Poly>& a, const std::vector<Poly>& b) {
    return ideal_equal(r, groebner_ideal(r, a), groebner_ideal(r, b));
}

}  // namespace acmforge::testing
