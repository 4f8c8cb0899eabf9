#pragma once
#include <array>
#include <cstdint>

#include "acmforge/errors.hpp"

namespace acmforge {

constexpr int kMaxVars = 16;

// Exponent vector with cached total degree. The slot count is fixed; unused
// trailing slots stay zero, so comparisons can always scan the full array.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::int32_t deg = 0;

    static Monomial one() { return Monomial{}; }

    static Monomial var(int i, int power = 1) {
        Monomial m;
        m.e[i] = static_cast<std::uint8_t>(power);
        m.deg = power;
        return m;
    }

    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial mul(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = e[i] + o.e[i];
            ensure(s < 256, "monomial exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        r.deg = deg + o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    // quotient o / this; caller guarantees divisibility
    Monomial quotient_of(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        r.deg = o.deg - deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        int d = 0;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
            d += r.e[i];
        }
        r.deg = d;
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] && o.e[i]) return false;
        return true;
    }
};

}  // namespace acmforge
