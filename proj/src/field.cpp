#include "acmforge/field.hpp"

namespace acmforge {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // extended euclid on (a, p); a in [1, p)
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a);
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw InvariantViolation("non-invertible residue");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    require(p >= 3, "field characteristic must be an odd prime >= 3");
    require(p < (1ull << 31), "prime too large (must fit below 2^31)");
    require(p % 2 == 1 && is_prime_u64(p), "characteristic is not an odd prime");
    return Field(FieldKind::prime, p);
}

Field Field::rationals() { return Field(FieldKind::rational, 0); }

void Field::check_residue(const Scalar& a) const {
    if (kind_ == FieldKind::prime) {
        ensure(a.is_residue(), "rational scalar used in a prime field");
    } else {
        ensure(!a.is_residue(), "residue scalar used in the rational field");
    }
}

Scalar Field::zero() const {
    return kind_ == FieldKind::prime ? Scalar(std::uint64_t{0}) : Scalar(mpq_class(0));
}

Scalar Field::one() const {
    return kind_ == FieldKind::prime ? Scalar(std::uint64_t{1}) : Scalar(mpq_class(1));
}

Scalar Field::from_int(long long v) const {
    if (kind_ == FieldKind::rational) return Scalar(mpq_class(static_cast<long>(v)));
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return Scalar(static_cast<std::uint64_t>(r));
}

Scalar Field::from_fraction(long long num, long long den) const {
    require(den != 0, "zero denominator");
    if (kind_ == FieldKind::rational) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return Scalar(q);
    }
    return div(from_int(num), from_int(den));
}

bool Field::is_zero(const Scalar& a) const {
    check_residue(a);
    return kind_ == FieldKind::prime ? a.residue() == 0 : a.rational() == 0;
}

bool Field::is_one(const Scalar& a) const {
    check_residue(a);
    return kind_ == FieldKind::prime ? a.residue() == 1 : a.rational() == 1;
}

bool Field::eq(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    return kind_ == FieldKind::prime ? a.residue() == b.residue()
                                     : a.rational() == b.rational();
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = a.residue() + b.residue();
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (kind_ == FieldKind::prime) {
        std::uint64_t s = a.residue() + p_ - b.residue();
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check_residue(a);
    check_residue(b);
    if (kind_ == FieldKind::prime) return Scalar(a.residue() * b.residue() % p_);
    return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
    check_residue(a);
    if (kind_ == FieldKind::prime) {
        return Scalar(a.residue() == 0 ? std::uint64_t{0} : p_ - a.residue());
    }
    return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
    check_residue(a);
    ensure(!is_zero(a), "division by zero");
    if (kind_ == FieldKind::prime) return Scalar(mod_inverse(a.residue(), p_));
    return Scalar(mpq_class(1 / a.rational()));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::sample(Rng& rng) const {
    if (kind_ == FieldKind::prime) return Scalar(rng.below(p_));
    long long v = static_cast<long long>(rng.below(2000001)) - 1000000;
    return from_int(v);
}

Scalar Field::sample_nonzero(Rng& rng) const {
    for (;;) {
        Scalar s = sample(rng);
        if (!is_zero(s)) return s;
    }
}

std::string Field::str(const Scalar& a) const {
    check_residue(a);
    if (kind_ == FieldKind::prime) return std::to_string(a.residue());
    return a.rational().get_str();
}

Scalar Field::parse(const std::string& text) const {
    if (kind_ == FieldKind::rational) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + text + "'");
        q.canonicalize();
        return Scalar(q);
    }
    mpz_class z;
    if (z.set_str(text, 10) != 0) throw ParseError("bad integer '" + text + "'");
    mpz_class r = z % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    return Scalar(static_cast<std::uint64_t>(r.get_ui()));
}

}  // namespace acmforge
