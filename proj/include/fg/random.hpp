#pragma once

#include <cstdint>
#include <random>

#include "fg/word.hpp"

namespace fg {

/// Seedable random source (mt19937_64 core). Bounded draws use rejection
/// sampling, so they are exactly uniform and identical on every platform;
/// the std distributions are implementation-defined and are avoided.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform on [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform on {lo, ..., hi}.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

/// Derives an independent per-trial source from (master seed, stream, trial).
Rng derived_rng(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t trial);

std::uint64_t mix64(std::uint64_t x);

/// Number of reduced words of length n: 2r(2r-1)^(n-1); 1 for n = 0.
/// Throws std::overflow_error instead of wrapping.
std::uint64_t count_reduced(int r, int n);

/// Exactly uniform sample over the reduced words of length n: first letter
/// uniform over 2r choices, every subsequent letter uniform over the 2r-1
/// letters distinct from the inverse of its predecessor.
Word sample_uniform_reduced(const Alphabet& alphabet, int n, Rng& rng);

}  // namespace fg
