#include "fg/stallings.hpp"

#include <cassert>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace fg {

namespace {

/// Union-find folding workspace over the wedge-of-loops vertex set.
struct Folder {
    int slots;
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<std::vector<int>> adj;
    std::deque<std::pair<int, int>> pending;

    explicit Folder(int slot_count) : slots(slot_count) {}

    int add_vertex() {
        parent.push_back(static_cast<int>(parent.size()));
        size.push_back(1);
        adj.emplace_back(slots, -1);
        return static_cast<int>(parent.size()) - 1;
    }

    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    // Installs a half-edge p --slot--> q; a clash queues a vertex merge.
    void set_slot(int p, int slot, int q) {
        p = find(p);
        int& cell = adj[p][static_cast<std::size_t>(slot)];
        if (cell == -1) {
            cell = q;
        } else if (find(cell) != find(q)) {
            pending.emplace_back(cell, q);
        }
    }

    void process() {
        while (!pending.empty()) {
            auto [a, b] = pending.front();
            pending.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (size[a] < size[b]) std::swap(a, b);
            parent[b] = a;
            size[a] += size[b];
            for (int s = 0; s < slots; ++s) {
                const int t = adj[b][static_cast<std::size_t>(s)];
                if (t == -1) continue;
                int& cell = adj[a][static_cast<std::size_t>(s)];
                if (cell == -1) {
                    cell = t;
                } else if (find(cell) != find(t)) {
                    pending.emplace_back(cell, t);
                }
            }
            adj[b].clear();
        }
    }
};

}  // namespace

StallingsGraph StallingsGraph::build(const std::vector<Word>& generators, const Alphabet& alphabet) {
    for (const Word& w : generators) {
        if (w.max_index() > alphabet.rank) {
            throw std::invalid_argument("generator uses a letter outside the alphabet");
        }
    }

    const int slots = alphabet.letter_count();
    Folder f(slots);
    const int root = f.add_vertex();

    for (const Word& w : generators) {
        if (w.empty()) continue;  // empty generators are dropped
        int cur = root;
        for (std::size_t i = 0; i < w.length(); ++i) {
            const Letter a = w[i];
            const int next = (i + 1 == w.length()) ? root : f.add_vertex();
            f.set_slot(cur, alphabet.slot(a), next);
            f.set_slot(next, alphabet.slot(inverse(a)), cur);
            f.process();
            cur = f.find(next);
        }
    }

    // Collect surviving classes with resolved targets.
    std::vector<int> id(f.parent.size(), -1);
    std::vector<std::vector<int>> adj;
    std::vector<int> rep;
    for (int v = 0; v < static_cast<int>(f.parent.size()); ++v) {
        if (f.find(v) == v) {
            id[static_cast<std::size_t>(v)] = static_cast<int>(adj.size());
            rep.push_back(v);
            adj.emplace_back(slots, -1);
        }
    }
    for (std::size_t c = 0; c < rep.size(); ++c) {
        for (int s = 0; s < slots; ++s) {
            const int t = f.adj[static_cast<std::size_t>(rep[c])][static_cast<std::size_t>(s)];
            if (t != -1) adj[c][static_cast<std::size_t>(s)] = id[static_cast<std::size_t>(f.find(t))];
        }
    }
    int root_id = id[static_cast<std::size_t>(f.find(root))];

    // Prune dead ends: non-root vertices incident to a single half-edge
    // cannot lie on any reduced circuit at the root.
    std::vector<int> degree(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        for (int s = 0; s < slots; ++s) {
            if (adj[v][static_cast<std::size_t>(s)] != -1) ++degree[v];
        }
    }
    std::queue<int> dead;
    std::vector<char> removed(adj.size(), 0);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (static_cast<int>(v) != root_id && degree[v] <= 1) dead.push(static_cast<int>(v));
    }
    while (!dead.empty()) {
        const int v = dead.front();
        dead.pop();
        if (removed[static_cast<std::size_t>(v)] || v == root_id) continue;
        removed[static_cast<std::size_t>(v)] = 1;
        for (int s = 0; s < slots; ++s) {
            const int t = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
            if (t == -1) continue;
            adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)] = -1;
            const int back = (s % 2 == 0) ? s + 1 : s - 1;
            if (!removed[static_cast<std::size_t>(t)]) {
                adj[static_cast<std::size_t>(t)][static_cast<std::size_t>(back)] = -1;
                if (--degree[static_cast<std::size_t>(t)] <= 1 && t != root_id) dead.push(t);
            }
        }
    }

    // Canonical breadth-first renumbering from the root in slot order.
    std::vector<int> order(adj.size(), -1);
    std::vector<int> bfs;
    order[static_cast<std::size_t>(root_id)] = 0;
    bfs.push_back(root_id);
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const int v = bfs[head];
        for (int s = 0; s < slots; ++s) {
            const int t = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)];
            if (t != -1 && order[static_cast<std::size_t>(t)] == -1) {
                order[static_cast<std::size_t>(t)] = static_cast<int>(bfs.size());
                bfs.push_back(t);
            }
        }
    }

    StallingsGraph g(alphabet);
    g.adj_.assign(bfs.size(), std::vector<int>(static_cast<std::size_t>(slots), -1));
    for (std::size_t i = 0; i < bfs.size(); ++i) {
        for (int s = 0; s < slots; ++s) {
            const int t = adj[static_cast<std::size_t>(bfs[i])][static_cast<std::size_t>(s)];
            if (t != -1) g.adj_[i][static_cast<std::size_t>(s)] = order[static_cast<std::size_t>(t)];
        }
    }
    return g;
}

int StallingsGraph::edge_count() const {
    int half = 0;
    for (const auto& row : adj_) {
        for (int t : row) {
            if (t != -1) ++half;
        }
    }
    assert(half % 2 == 0);
    return half / 2;
}

std::optional<int> StallingsGraph::finite_index() const {
    if (2 * edge_count() == vertex_count() * alphabet_.letter_count()) return vertex_count();
    return std::nullopt;
}

std::string StallingsGraph::to_dot() const {
    std::ostringstream out;
    out << "digraph stallings {\n  rankdir=LR;\n";
    out << "  1 [shape=doublecircle];\n";
    for (int v = 1; v < vertex_count(); ++v) out << "  " << v + 1 << " [shape=circle];\n";
    for (int v = 0; v < vertex_count(); ++v) {
        for (Letter a = 1; a <= alphabet_.rank; ++a) {
            const int t = target(v, a);
            if (t != -1) {
                out << "  " << v + 1 << " -> " << t + 1 << " [label=\""
                    << format_letter(a, alphabet_.rank) << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

SpanningBasis spanning_basis(const StallingsGraph& g) {
    const Alphabet& alpha = g.alphabet();
    const int slots = alpha.letter_count();
    const int n = g.vertex_count();

    SpanningBasis b;
    b.parent.assign(static_cast<std::size_t>(n), -1);
    b.parent_letter.assign(static_cast<std::size_t>(n), 0);
    b.root_paths.assign(static_cast<std::size_t>(n), Word{});
    b.step.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(slots), 0));

    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<char>> edge_seen(static_cast<std::size_t>(n),
                                             std::vector<char>(static_cast<std::size_t>(slots), 0));

    // Iterative DFS, letters scanned in slot order, so the tree and the
    // basis enumeration are reproducible.
    std::vector<std::pair<int, int>> stack;  // (vertex, next slot)
    visited[0] = 1;
    stack.emplace_back(0, 0);
    while (!stack.empty()) {
        auto& [v, s] = stack.back();
        if (s == slots) {
            stack.pop_back();
            continue;
        }
        const int slot = s++;
        const int t = g.target(v, alpha.letter_at(slot));
        if (t == -1 || edge_seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)]) continue;
        const Letter a = alpha.letter_at(slot);
        const int back = alpha.slot(inverse(a));
        edge_seen[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)] = 1;
        edge_seen[static_cast<std::size_t>(t)][static_cast<std::size_t>(back)] = 1;
        if (!visited[static_cast<std::size_t>(t)]) {
            visited[static_cast<std::size_t>(t)] = 1;
            b.parent[static_cast<std::size_t>(t)] = v;
            b.parent_letter[static_cast<std::size_t>(t)] = a;
            b.root_paths[static_cast<std::size_t>(t)] =
                concat_reduce(b.root_paths[static_cast<std::size_t>(v)], Word::trusted({a}));
            stack.emplace_back(t, 0);
        } else {
            // Non-tree edge, oriented by its positive letter.
            const int p = (a > 0) ? v : t;
            const int q = (a > 0) ? t : v;
            const Letter pos = (a > 0) ? a : inverse(a);
            b.words.push_back(concat_reduce(
                concat_reduce(b.root_paths[static_cast<std::size_t>(p)], Word::trusted({pos})),
                invert(b.root_paths[static_cast<std::size_t>(q)])));
            const int idx = static_cast<int>(b.words.size());
            b.step[static_cast<std::size_t>(p)][static_cast<std::size_t>(alpha.slot(pos))] = idx;
            b.step[static_cast<std::size_t>(q)][static_cast<std::size_t>(alpha.slot(inverse(pos)))] = -idx;
        }
    }
    return b;
}

std::optional<Word> membership_mp(const Word& w0, const StallingsGraph& g, const SpanningBasis& basis) {
    const Alphabet& alpha = g.alphabet();
    int cur = 0;
    std::vector<Letter> expr;
    for (Letter a : w0) {
        if (!alpha.contains(a)) throw std::invalid_argument("word uses a letter outside the alphabet");
        const int t = g.target(cur, a);
        if (t == -1) return std::nullopt;
        const int s = basis.step[static_cast<std::size_t>(cur)][static_cast<std::size_t>(alpha.slot(a))];
        if (s != 0) {
            assert(expr.empty() || expr.back() != inverse(s));
            expr.push_back(s);
        }
        cur = t;
    }
    if (cur != 0) return std::nullopt;
    return Word::trusted(std::move(expr));
}

std::optional<Word> membership_mp(const Word& w0, const std::vector<Word>& generators,
                                  const Alphabet& alphabet) {
    const StallingsGraph g = StallingsGraph::build(generators, alphabet);
    return membership_mp(w0, g, spanning_basis(g));
}

}  // namespace fg
