#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fg/stallings.hpp"
#include "fg/word.hpp"

namespace fg {

/// Tree of the depth-d prefixes of the tuple words and their inverses,
/// read as an edge-labeled graph: moving by letter a goes down the matching
/// child or up the parent edge when that edge is labeled a^-1. Both moves
/// can never compete because the stored prefixes are reduced.
struct PrefixTrie {
    struct Node {
        int parent = -1;
        Letter in_letter = 0;   // label of the edge parent -> node
        int leaf = 0;           // signed tuple index when this node is pr_i, else 0
        std::vector<int> children;  // per slot, -1 = absent
    };

    int rank = 0;
    std::vector<Node> nodes;  // node 0 = root

    int move(int node, Letter a) const;
    int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Witness of the depth-d central tree property of a tuple (w_1..w_k):
/// all 2k depth-d prefixes of the w_i and w_i^-1 are pairwise distinct and
/// every |w_i| > 2d, so w_i = pr_{-i} mf_d(w_i) pr_i^-1 exactly.
struct CtpCertificate {
    int depth = 0;
    int k = 0;
    PrefixTrie trie;
    std::vector<Word> prefixes;    // pr_i, indexed by index_slot(i)
    std::vector<Word> middles;     // mf_d(w_i)
    std::vector<int> leaf_node;    // trie node of pr_i

    // i in {-k..-1, 1..k}
    static std::size_t index_slot(int i) {
        return static_cast<std::size_t>(2 * (std::abs(i) - 1) + (i < 0 ? 1 : 0));
    }
    const Word& prefix(int i) const { return prefixes[index_slot(i)]; }
    const Word& middle(int i) const { return middles[index_slot(i)]; }
    int leaf(int i) const { return leaf_node[index_slot(i)]; }
};

/// Decides the d-ctp reading at most 2kd letters; absent when some word is
/// too short or two prefixes collide.
std::optional<CtpCertificate> check_ctp(const std::vector<Word>& tuple, int depth,
                                        const Alphabet& alphabet);

/// Maximal d for which the tuple has the d-ctp, absent if none. Distinctness
/// is upward-monotone in d, so only the largest admissible depth is tested.
std::optional<int> has_ctp(const std::vector<Word>& tuple, const Alphabet& alphabet);

/// Shape of the tuple failure probability bound: k^2 (2r-1)^(-d(n/2)),
/// with constant 1 (the hidden constant is not pinned down).
double ctp_failure_probability_bound(int k, int r, int d_half);

/// Depth functions d(n) used by the fast membership algorithm, clamped to
/// [1, ceil(n/2)-1].
struct DepthPolicy {
    enum class Kind { log2n, power, linear, log_base };

    Kind kind = Kind::log2n;
    double param = 0.0;  // gamma or beta where applicable

    int eval(int n, int k, int r) const;

    /// "logn" | "pow:g" | "lin:g" | "log3b:b"
    static DepthPolicy parse(std::string_view text);
    std::string str() const;
};

struct MembershipReport {
    enum class Path { fast, fallback };

    bool member = false;
    std::optional<Word> expression;  // over `basis` when member
    std::vector<Word> basis;         // tuple itself (fast) or spanning basis (fallback)
    Path path = Path::fallback;
    int depth = 0;                   // d(n) evaluated for the instance
    std::uint64_t letters_examined = 0;  // letters of w0 read or compared
    std::uint64_t trie_steps = 0;
};

/// Average-case membership: gate on the d(n)-ctp and min|w| > n/2, walk the
/// prefix tree emitting one basis letter per middle-factor passage, and fall
/// back to the classical algorithm when the gate fails. The verdict always
/// equals membership_mp's.
MembershipReport membership_mpd(const Word& w0, const std::vector<Word>& tuple,
                                const DepthPolicy& policy, const Alphabet& alphabet);

}  // namespace fg
