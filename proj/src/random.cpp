#include "fg/random.hpp"

#include <limits>
#include <stdexcept>

namespace fg {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Threshold rejection: keep only draws below the largest multiple of bound.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = eng_();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng derived_rng(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t trial) {
    return Rng(mix64(master_seed ^ mix64(stream ^ mix64(trial))));
}

std::uint64_t count_reduced(int r, int n) {
    if (r < 1) throw std::invalid_argument("rank must be >= 1");
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    if (n == 0) return 1;
    std::uint64_t count = static_cast<std::uint64_t>(2 * r);
    const std::uint64_t base = static_cast<std::uint64_t>(2 * r - 1);
    for (int i = 1; i < n; ++i) {
        if (base != 0 && count > std::numeric_limits<std::uint64_t>::max() / base) {
            throw std::overflow_error("count_reduced overflows 64 bits");
        }
        count *= base;
    }
    return count;
}

Word sample_uniform_reduced(const Alphabet& alphabet, int n, Rng& rng) {
    if (n < 0) throw std::invalid_argument("length must be >= 0");
    const int r = alphabet.rank;
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            out.push_back(alphabet.letter_at(static_cast<int>(rng.below(2 * r))));
        } else {
            // Pick among the 2r-1 letters that are not the inverse of the last.
            const int banned = alphabet.slot(inverse(out.back()));
            int s = static_cast<int>(rng.below(2 * r - 1));
            if (s >= banned) ++s;
            out.push_back(alphabet.letter_at(s));
        }
    }
    return Word::trusted(std::move(out));
}

}  // namespace fg
