#pragma once

#include <random>

#include "ospbi/rational.hpp"

namespace ospbi {

// Deterministic parameter sampling for property sweeps. Draws go through an
// explicit modulo rather than std::uniform_int_distribution so a seed
// reproduces the same sweep on every platform and standard library.
class Sampler {
public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    long uniform_long(long lo, long hi) {
        unsigned long long span = static_cast<unsigned long long>(hi - lo) + 1ULL;
        return lo + static_cast<long>(rng_() % span);
    }

    // num/den with num in [1, max_num] and den in [1, max_den]; always > 0,
    // which keeps every recurrence denominator used here away from zero.
    Rational positive_rational(long max_num, long max_den) {
        long num = uniform_long(1, max_num);
        long den = uniform_long(1, max_den);
        return Rational(num, den);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace ospbi
