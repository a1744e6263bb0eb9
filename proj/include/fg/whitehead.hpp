#pragma once

#include <cstdint>
#include <vector>

#include "fg/word.hpp"

namespace fg {

/// Simple undirected graph on the 2r letters of the symmetrized alphabet,
/// vertices in slot order a1, a1^-1, a2, a2^-1, ...
class WhiteheadGraph {
public:
    explicit WhiteheadGraph(int rank);

    int rank() const { return rank_; }
    int vertex_count() const { return 2 * rank_; }
    int edge_count() const { return edges_; }

    /// Adds the undirected edge {x, y}; duplicate insertions are ignored,
    /// loops are rejected.
    void add_edge(Letter x, Letter y);
    bool has_edge(Letter x, Letter y) const;
    bool has_edge_slots(int sx, int sy) const {
        return adj_[static_cast<std::size_t>(sx) * static_cast<std::size_t>(2 * rank_) +
                    static_cast<std::size_t>(sy)] != 0;
    }

    friend bool operator==(const WhiteheadGraph&, const WhiteheadGraph&) = default;

private:
    int rank_;
    int edges_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Edge {x_i, x_{i+1}^-1} per adjacent pair of u; the wrap-around pair
/// x_n x_1 is included exactly when cyclic is set (W(u) vs W'(u)).
WhiteheadGraph whitehead_graph(const Word& u, bool cyclic, const Alphabet& alphabet);

/// True iff the graph is connected on all 2r vertices and has no
/// articulation point (lowpoint depth-first search).
bool connected_without_cutvertex(const WhiteheadGraph& g);

/// Type II Whitehead automorphism (S, a) with a in S, a^-1 not in S:
/// a is fixed; any other letter x maps to xa, a^-1 x or a^-1 x a according
/// to which of x, x^-1 lie in S, extended by phi(x^-1) = phi(x)^-1.
struct WhiteheadAutomorphism {
    Letter multiplier = 0;
    std::vector<std::uint8_t> in_set;  // indexed by slot over the full alphabet

    WhiteheadAutomorphism(Letter a, const std::vector<Letter>& set, const Alphabet& alphabet);

    bool contains(Letter x, const Alphabet& alphabet) const {
        return in_set[static_cast<std::size_t>(alphabet.slot(x))] != 0;
    }

    WhiteheadAutomorphism inverted(const Alphabet& alphabet) const;
};

Word apply_whitehead(const WhiteheadAutomorphism& phi, const Word& w, const Alphabet& alphabet);

/// All 2r * 2^(2r-2) type II automorphisms, multipliers in letter order and
/// subsets in binary-counter order, fixing the greedy reducer's determinism.
std::vector<WhiteheadAutomorphism> enumerate_whitehead(const Alphabet& alphabet);

/// Greedy Whitehead reduction on the cyclic core: apply the first
/// automorphism that strictly shrinks the cyclic length until none does;
/// primitive iff the terminal cyclic length is 1.
bool is_primitive_whitehead(const Word& w, const Alphabet& alphabet);

}  // namespace fg
