#pragma once

#include <cstdint>
#include <vector>

#include "fg/whitehead.hpp"

namespace fg {

/// 0/1 transition matrix of the letter automaton of a simple graph G on the
/// symmetrized alphabet, rows and columns in slot order a1, a1^-1, a2, ...
/// Entry (p, q) is 1 iff G has the edge {p^-1, q}; reading q after p is legal
/// exactly in that case, and loop-freeness of G keeps every accepted word
/// reduced.
struct TransitionMatrix {
    int order = 0;
    std::vector<std::uint8_t> entries;  // row-major

    std::uint8_t at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(order) +
                       static_cast<std::size_t>(j)];
    }

    friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
};

TransitionMatrix automaton_matrix(const WhiteheadGraph& g);

/// Clique on the 2r letters (no loops) and the clique minus one edge.
WhiteheadGraph complete_letter_graph(int r);
WhiteheadGraph complete_letter_graph_minus(int r, Letter x, Letter y);

/// Number of walks with n vertices (n-1 transitions) in the automaton,
/// anywhere to anywhere: the entry sum of M^(n-1). Exact integers; throws
/// std::overflow_error instead of wrapping.
std::uint64_t path_count(const TransitionMatrix& m, int n);

/// Spectral radius by power iteration from the all-ones vector, Rayleigh
/// quotient stopping rule. A defective dominant eigenvalue converges slowly
/// (the quotient error decays like 1/t, not geometrically), so the internal
/// threshold is tol^2; non-convergence within the iteration cap throws.
double dominant_eigenvalue(const TransitionMatrix& m, double tol);

/// Closed forms for the clique minus {a,a^-1} and minus {a,b}:
/// (2r-3+sqrt((2r+1)^2-8))/2, and the largest root of
/// X^3-(2r-1)X^2+4(r-1) (bisection on [2(2r-1)/3, 2r-1]).
double gaa_modulus(int r);
double gab_modulus(int r);

/// Growth bound (2k-1)^(1/(mu-2d)) for a subgroup given by a k-tuple with
/// the d-ctp and shortest generator length mu.
double ctp_growth_bound(int k, int mu, int d);

}  // namespace fg
