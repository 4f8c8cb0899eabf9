#pragma once
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "acmforge/errors.hpp"
#include "acmforge/rng.hpp"

namespace acmforge {

// A field element: either a residue in [0, p) or an exact rational.
// Which alternative is active is dictated by the owning Field; elements of
// different fields must never be mixed (ops check the alternative).
class Scalar {
public:
    Scalar() : v_(std::uint64_t{0}) {}
    explicit Scalar(std::uint64_t r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    bool is_residue() const { return v_.index() == 0; }
    std::uint64_t residue() const { return std::get<0>(v_); }
    const mpq_class& rational() const { return std::get<1>(v_); }

private:
    std::variant<std::uint64_t, mpq_class> v_;
};

enum class FieldKind { prime, rational };

// Arithmetic context: F_p for an odd prime p (default 32003), or Q.
class Field {
public:
    static Field prime(std::uint64_t p);
    static Field rationals();

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == FieldKind::prime ? p_ : 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_fraction(long long num, long long den) const;

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const;

    // Uniform over the field's canonical sampling box: all residues for F_p,
    // integers in [-10^6, 10^6] for Q (used only for random coefficients).
    Scalar sample(Rng& rng) const;
    Scalar sample_nonzero(Rng& rng) const;

    // Canonical text: residue as decimal in [0, p); rational as num or num/den.
    std::string str(const Scalar& a) const;
    Scalar parse(const std::string& text) const;

    bool same(const Field& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }

private:
    Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    void check_residue(const Scalar& a) const;

    FieldKind kind_;
    std::uint64_t p_;
};

constexpr std::uint64_t kDefaultPrime = 32003;

}  // namespace acmforge
