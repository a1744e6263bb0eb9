#include "fg/ctp.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fg {

int PrefixTrie::move(int node, Letter a) const {
    const Node& nd = nodes[static_cast<std::size_t>(node)];
    const int child = nd.children[static_cast<std::size_t>(2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0))];
    if (child != -1) return child;
    if (nd.parent != -1 && nd.in_letter == inverse(a)) return nd.parent;
    return -1;
}

std::optional<CtpCertificate> check_ctp(const std::vector<Word>& tuple, int depth,
                                        const Alphabet& alphabet) {
    if (depth < 1) throw std::invalid_argument("ctp depth must be >= 1");
    const int k = static_cast<int>(tuple.size());
    if (k < 1) return std::nullopt;
    for (const Word& w : tuple) {
        if (static_cast<int>(w.length()) <= 2 * depth) return std::nullopt;
    }

    CtpCertificate cert;
    cert.depth = depth;
    cert.k = k;
    cert.trie.rank = alphabet.rank;
    cert.trie.nodes.emplace_back();
    cert.trie.nodes[0].children.assign(static_cast<std::size_t>(alphabet.letter_count()), -1);
    cert.prefixes.assign(static_cast<std::size_t>(2 * k), Word{});
    cert.middles.assign(static_cast<std::size_t>(2 * k), Word{});
    cert.leaf_node.assign(static_cast<std::size_t>(2 * k), -1);

    for (int idx = 1; idx <= k; ++idx) {
        const Word& w = tuple[static_cast<std::size_t>(idx - 1)];
        const Word wi = invert(w);
        // pr_i is the depth-d prefix of w_{-i}.
        for (int sign = -1; sign <= 1; sign += 2) {
            const int i = sign * idx;
            const Word& source = (i < 0) ? w : wi;  // w_{-i}
            std::vector<Letter> pref(source.begin(), source.begin() + depth);
            int node = 0;
            for (Letter a : pref) {
                if (!alphabet.contains(a)) throw std::invalid_argument("letter outside alphabet");
                const std::size_t s = static_cast<std::size_t>(alphabet.slot(a));
                int next = cert.trie.nodes[static_cast<std::size_t>(node)].children[s];
                if (next == -1) {
                    next = cert.trie.node_count();
                    cert.trie.nodes[static_cast<std::size_t>(node)].children[s] = next;
                    PrefixTrie::Node nd;
                    nd.parent = node;
                    nd.in_letter = a;
                    nd.children.assign(static_cast<std::size_t>(alphabet.letter_count()), -1);
                    cert.trie.nodes.push_back(std::move(nd));
                }
                node = next;
            }
            if (cert.trie.nodes[static_cast<std::size_t>(node)].leaf != 0) {
                return std::nullopt;  // two equal prefixes
            }
            cert.trie.nodes[static_cast<std::size_t>(node)].leaf = i;
            const std::size_t slot = CtpCertificate::index_slot(i);
            cert.prefixes[slot] = Word::trusted(std::move(pref));
            cert.leaf_node[slot] = node;
            // mf_d(w_i): w_i minus its first and last d letters.
            const Word& wpos = (i > 0) ? w : wi;
            cert.middles[slot] = Word::trusted(
                {wpos.begin() + depth, wpos.end() - depth});
        }
    }
    return cert;
}

std::optional<int> has_ctp(const std::vector<Word>& tuple, const Alphabet& alphabet) {
    if (tuple.empty()) return std::nullopt;
    std::size_t mu = tuple.front().length();
    for (const Word& w : tuple) mu = std::min(mu, w.length());
    const int d_max = (static_cast<int>(mu) - 1) / 2;
    if (d_max < 1) return std::nullopt;
    // Prefixes distinct at depth d stay distinct at every larger depth, so
    // failing at d_max rules out all smaller depths as well.
    if (check_ctp(tuple, d_max, alphabet)) return d_max;
    return std::nullopt;
}

double ctp_failure_probability_bound(int k, int r, int d_half) {
    if (r < 2) throw std::invalid_argument("bound requires rank >= 2");
    return static_cast<double>(k) * static_cast<double>(k) *
           std::pow(static_cast<double>(2 * r - 1), -static_cast<double>(d_half));
}

int DepthPolicy::eval(int n, int /*k*/, int r) const {
    if (n < 2) throw std::invalid_argument("depth policy requires n >= 2");
    double v = 0.0;
    switch (kind) {
        case Kind::log2n: v = std::ceil(std::log2(static_cast<double>(n))); break;
        case Kind::power: v = std::ceil(std::pow(2.0 * n, param)); break;
        case Kind::linear: v = std::ceil(param * n); break;
        case Kind::log_base:
            v = std::ceil(3.0 * param / std::log(static_cast<double>(2 * r - 1)) *
                          std::log(2.0 * n));
            break;
    }
    const int hi = std::max(1, (n - 1) / 2);
    int d = static_cast<int>(v);
    if (d < 1) d = 1;
    if (d > hi) d = hi;
    return d;
}

DepthPolicy DepthPolicy::parse(std::string_view text) {
    DepthPolicy p;
    if (text == "logn") {
        p.kind = Kind::log2n;
        return p;
    }
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view head = text.substr(0, colon);
        const std::string tail(text.substr(colon + 1));
        try {
            p.param = std::stod(tail);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad depth policy parameter: " + std::string(text));
        }
        if (head == "pow") {
            if (p.param <= 0.0 || p.param >= 1.0)
                throw std::invalid_argument("pow policy needs 0 < gamma < 1");
            p.kind = Kind::power;
            return p;
        }
        if (head == "lin") {
            if (p.param <= 0.0 || p.param >= 0.5)
                throw std::invalid_argument("lin policy needs 0 < gamma < 1/2");
            p.kind = Kind::linear;
            return p;
        }
        if (head == "log3b") {
            if (p.param <= 0.0) throw std::invalid_argument("log3b policy needs beta > 0");
            p.kind = Kind::log_base;
            return p;
        }
    }
    throw std::invalid_argument("unknown depth policy: " + std::string(text) +
                                " (expected logn, pow:g, lin:g or log3b:b)");
}

std::string DepthPolicy::str() const {
    switch (kind) {
        case Kind::log2n: return "logn";
        case Kind::power: return "pow:" + std::to_string(param);
        case Kind::linear: return "lin:" + std::to_string(param);
        case Kind::log_base: return "log3b:" + std::to_string(param);
    }
    return "?";
}

namespace {

/// Fast path: deterministic walk of w0 through the prefix tree, with one
/// middle-factor jump per basis letter emitted. Ends a member exactly when
/// the reading ends at the root.
MembershipReport run_fast_path(const Word& w0, const CtpCertificate& cert,
                               const std::vector<Word>& tuple, int depth) {
    MembershipReport rep;
    rep.path = MembershipReport::Path::fast;
    rep.depth = depth;
    rep.basis = tuple;

    const std::size_t m = w0.length();
    std::vector<Letter> expr;
    std::size_t cursor = 0;
    int node = 0;

    // probe: is mf_d(w_i) a proper prefix of w0[cursor..)? On success the
    // cursor jumps past it and the walk resumes at the far leaf pr_i.
    const auto probe = [&](int i) -> bool {
        const Word& mf = cert.middle(i);
        if (mf.length() + 1 > m - cursor) {
            // Cannot be a proper prefix; count the comparisons actually doable.
            std::size_t avail = std::min(mf.length(), m - cursor);
            for (std::size_t j = 0; j < avail; ++j) {
                ++rep.letters_examined;
                if (mf[j] != w0[cursor + j]) break;
            }
            return false;
        }
        for (std::size_t j = 0; j < mf.length(); ++j) {
            ++rep.letters_examined;
            if (mf[j] != w0[cursor + j]) return false;
        }
        cursor += mf.length();
        // consecutive leaf passages can never be mutually inverse in a tree
        assert(expr.empty() || expr.back() != inverse(static_cast<Letter>(i)));
        expr.push_back(static_cast<Letter>(i));
        node = cert.leaf(i);
        return true;
    };

    // Initial descent from the root. Every letter read is charged, including
    // the one that fails to match.
    bool at_fresh_leaf = false;
    int fresh_leaf_index = 0;
    while (cursor < m) {
        ++rep.letters_examined;
        const int next = cert.trie.move(node, w0[cursor]);
        if (next == -1) break;
        ++rep.trie_steps;
        node = next;
        ++cursor;
        const int leaf = cert.trie.nodes[static_cast<std::size_t>(node)].leaf;
        if (leaf != 0) {
            at_fresh_leaf = true;
            fresh_leaf_index = leaf;
            break;
        }
    }
    if (!at_fresh_leaf) {
        rep.member = (cursor == m && node == 0);
        if (rep.member) rep.expression = Word::trusted({});
        return rep;
    }

    // leaf pr_{-i} hosts the departure of mf_d(w_i)
    assert(cursor == static_cast<std::size_t>(depth));
    if (!probe(-fresh_leaf_index)) {
        rep.member = false;
        return rep;
    }

    // Iterated step: from the last-visited leaf pr_t.
    while (true) {
        const int t = cert.trie.nodes[static_cast<std::size_t>(node)].leaf;
        assert(t != 0);
        const std::size_t remaining = m - cursor;
        if (remaining == static_cast<std::size_t>(depth)) {
            // End-at-root test first: the only depth-d path from a leaf to the
            // root climbs straight up, spelling pr_t^-1.
            const Word up = invert(cert.prefix(t));
            bool equal = true;
            for (std::size_t j = 0; j < up.length(); ++j) {
                ++rep.letters_examined;
                if (up[j] != w0[cursor + j]) {
                    equal = false;
                    break;
                }
            }
            if (equal) {
                rep.member = true;
                rep.expression = Word::trusted(std::move(expr));
                return rep;
            }
        }
        // Walk inside the tree until the next leaf (or until stuck / consumed).
        bool jumped = false;
        while (cursor < m) {
            ++rep.letters_examined;
            const int next = cert.trie.move(node, w0[cursor]);
            if (next == -1) {
                rep.member = false;
                return rep;
            }
            ++rep.trie_steps;
            node = next;
            ++cursor;
            const int leaf = cert.trie.nodes[static_cast<std::size_t>(node)].leaf;
            if (leaf != 0) {
                if (!probe(-leaf)) {
                    rep.member = false;
                    return rep;
                }
                jumped = true;
                break;
            }
        }
        if (!jumped) {
            rep.member = (cursor == m && node == 0);
            if (rep.member) rep.expression = Word::trusted(std::move(expr));
            return rep;
        }
    }
}

}  // namespace

MembershipReport membership_mpd(const Word& w0, const std::vector<Word>& tuple,
                                const DepthPolicy& policy, const Alphabet& alphabet) {
    std::vector<Word> gens;
    gens.reserve(tuple.size());
    for (const Word& w : tuple) {
        if (!w.empty()) gens.push_back(w);
    }

    MembershipReport rep;
    if (gens.empty()) {
        rep.path = MembershipReport::Path::fallback;
        rep.member = w0.empty();
        if (rep.member) rep.expression = Word::trusted({});
        return rep;
    }

    std::size_t n = 0, mu = gens.front().length();
    for (const Word& w : gens) {
        n = std::max(n, w.length());
        mu = std::min(mu, w.length());
    }

    const int k = static_cast<int>(gens.size());
    const int depth = (n >= 2) ? policy.eval(static_cast<int>(n), k, alphabet.rank) : 1;

    if (n >= 2 && 2 * mu > n) {
        if (auto cert = check_ctp(gens, depth, alphabet)) {
            return run_fast_path(w0, *cert, gens, depth);
        }
    }

    // Fallback: classical algorithm over the Stallings graph.
    const StallingsGraph g = StallingsGraph::build(gens, alphabet);
    const SpanningBasis basis = spanning_basis(g);
    rep.path = MembershipReport::Path::fallback;
    rep.depth = depth;
    rep.basis = basis.words;
    auto x0 = membership_mp(w0, g, basis);
    rep.member = x0.has_value();
    rep.letters_examined = w0.length();
    if (x0) rep.expression = std::move(*x0);
    return rep;
}

}  // namespace fg
