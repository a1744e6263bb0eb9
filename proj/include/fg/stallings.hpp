#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fg/word.hpp"

namespace fg {

/// Rooted, folded, edge-labeled graph of a finitely generated subgroup.
/// Deterministic and co-deterministic: per vertex at most one entry per
/// letter of the symmetrized alphabet, with (p,a)->q iff (q,a^-1)->p.
/// Vertices are numbered in breadth-first order from the root (vertex 0),
/// scanning letters a1 < a1^-1 < a2 < ..., so equal graphs compare equal.
class StallingsGraph {
public:
    /// Wedge of loops labeled by the generators, folded to determinism,
    /// with degree-1 non-root vertices pruned. Empty generators are dropped.
    static StallingsGraph build(const std::vector<Word>& generators, const Alphabet& alphabet);

    const Alphabet& alphabet() const { return alphabet_; }
    int vertex_count() const { return static_cast<int>(adj_.size()); }

    /// Number of labeled edges (each counted once, not per direction).
    int edge_count() const;

    /// target of the a-labeled move from v, or -1.
    int target(int v, Letter a) const { return adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(alphabet_.slot(a))]; }

    /// |E| - |V| + 1, the rank of the subgroup.
    int subgroup_rank() const { return edge_count() - vertex_count() + 1; }

    /// Vertex count when the adjacency is complete, absent otherwise.
    std::optional<int> finite_index() const;

    std::string to_dot() const;

    friend bool operator==(const StallingsGraph&, const StallingsGraph&) = default;

private:
    explicit StallingsGraph(const Alphabet& a) : alphabet_(a) {}

    Alphabet alphabet_;
    std::vector<std::vector<int>> adj_;  // V x 2r, -1 = absent
};

/// Depth-first spanning tree from the root plus the induced free basis of
/// the subgroup: one word b(e) = u(p) a u(q)^-1 per non-tree edge, listed
/// in first-encounter order of the DFS.
struct SpanningBasis {
    std::vector<int> parent;            // tree parent, -1 at root
    std::vector<Letter> parent_letter;  // label read parent -> vertex
    std::vector<Word> root_paths;       // u(p): tree path word from root
    std::vector<Word> words;            // basis words, 1-based indices in traces
    // Per (vertex, slot): signed basis index crossed by that move
    // (+i forward, -i backward), 0 for tree edges and absent slots.
    std::vector<std::vector<int>> step;
};

SpanningBasis spanning_basis(const StallingsGraph& g);

/// Classical membership: trace w0 from the root, collecting the sequence of
/// non-tree edges crossed. Present iff the trace exists and is a circuit;
/// the value is the expression of w0 in the spanning basis (reduced over X).
std::optional<Word> membership_mp(const Word& w0, const StallingsGraph& g, const SpanningBasis& basis);

std::optional<Word> membership_mp(const Word& w0, const std::vector<Word>& generators,
                                  const Alphabet& alphabet);

}  // namespace fg
