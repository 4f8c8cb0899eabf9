#pragma once
#include <cstdint>
#include <random>

namespace acmforge {

// Deterministic across platforms: mt19937_64 has a pinned sequence, and draws
// below a bound use rejection sampling (std::uniform_int_distribution does not
// guarantee a reproducible mapping).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace acmforge
