// Brute-force reference implementations used only by the test suites.
// They stay deliberately independent of the library's algorithmic paths:
// plain enumeration and pairwise comparisons, no tries, no folding, no
// incremental graphs.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fg/word.hpp"

namespace fg::oracle {

/// Visits every freely reduced word of length n over the alphabet.
void enumerate_reduced(const Alphabet& alphabet, int n,
                       const std::function<void(const Word&)>& visit);

std::vector<Word> all_reduced(const Alphabet& alphabet, int n);

/// Reduced-word count by enumeration.
std::uint64_t count_reduced_brute(const Alphabet& alphabet, int n);

/// Cyclically reduced count by enumeration.
std::uint64_t count_cyclically_reduced_brute(const Alphabet& alphabet, int n);

/// d-ctp by direct pairwise prefix comparison of the 2k prefixes.
bool ctp_brute(const std::vector<Word>& tuple, int d);

/// Maximal d with the d-ctp, trying every candidate downward.
std::optional<int> has_ctp_brute(const std::vector<Word>& tuple);

/// Orbit search: breadth-first closure of the cyclic core under all type II
/// Whitehead automorphisms, keeping non-increasing cyclic lengths; primitive
/// iff a length-1 word is reached. Exponential, only for short words.
bool primitive_by_orbit_search(const Word& w, const Alphabet& alphabet);

/// Pearson chi-square statistic for observed counts against equal cell
/// probabilities.
double chi_square_uniform(const std::vector<std::uint64_t>& observed);

}  // namespace fg::oracle
