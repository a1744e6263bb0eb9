#include "fg/whitehead.hpp"

#include <algorithm>
#include <stdexcept>

namespace fg {

WhiteheadGraph::WhiteheadGraph(int rank) : rank_(rank) {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    adj_.assign(static_cast<std::size_t>(2 * rank) * static_cast<std::size_t>(2 * rank), 0);
}

void WhiteheadGraph::add_edge(Letter x, Letter y) {
    const Alphabet a(rank_);
    if (!a.contains(x) || !a.contains(y)) throw std::invalid_argument("letter outside alphabet");
    if (x == y) throw std::invalid_argument("loops are not allowed");
    const std::size_t sx = static_cast<std::size_t>(a.slot(x));
    const std::size_t sy = static_cast<std::size_t>(a.slot(y));
    const std::size_t n = static_cast<std::size_t>(2 * rank_);
    if (adj_[sx * n + sy]) return;
    adj_[sx * n + sy] = 1;
    adj_[sy * n + sx] = 1;
    ++edges_;
}

bool WhiteheadGraph::has_edge(Letter x, Letter y) const {
    const Alphabet a(rank_);
    return has_edge_slots(a.slot(x), a.slot(y));
}

WhiteheadGraph whitehead_graph(const Word& u, bool cyclic, const Alphabet& alphabet) {
    if (u.length() < 2) throw std::invalid_argument("whitehead graph needs |u| >= 2");
    WhiteheadGraph g(alphabet.rank);
    const std::size_t n = u.length();
    const std::size_t pairs = cyclic ? n : n - 1;
    for (std::size_t i = 0; i < pairs; ++i) {
        g.add_edge(u[i], inverse(u[(i + 1) % n]));
    }
    return g;
}

bool connected_without_cutvertex(const WhiteheadGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    int timer = 0;
    bool has_cut = false;

    // Iterative lowpoint DFS from vertex 0.
    struct Frame {
        int v;
        int parent;
        int next = 0;
        int children = 0;
    };
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < n) {
            const int u = f.next++;
            if (u == f.v || !g.has_edge_slots(f.v, u)) continue;
            if (disc[static_cast<std::size_t>(u)] == -1) {
                ++f.children;
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                stack.push_back({u, f.v});
            } else if (u != f.parent) {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            const Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& up = stack.back();
                low[static_cast<std::size_t>(up.v)] =
                    std::min(low[static_cast<std::size_t>(up.v)], low[static_cast<std::size_t>(done.v)]);
                if (up.parent != -1 &&
                    low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(up.v)]) {
                    has_cut = true;
                }
            } else if (done.children > 1) {
                has_cut = true;  // root with two or more DFS subtrees
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (disc[static_cast<std::size_t>(v)] == -1) return false;  // disconnected
    }
    return !has_cut;
}

WhiteheadAutomorphism::WhiteheadAutomorphism(Letter a, const std::vector<Letter>& set,
                                             const Alphabet& alphabet) {
    multiplier = a;
    if (!alphabet.contains(a)) throw std::invalid_argument("multiplier outside alphabet");
    in_set.assign(static_cast<std::size_t>(alphabet.letter_count()), 0);
    for (Letter x : set) {
        if (!alphabet.contains(x)) throw std::invalid_argument("set letter outside alphabet");
        in_set[static_cast<std::size_t>(alphabet.slot(x))] = 1;
    }
    if (!contains(a, alphabet)) throw std::invalid_argument("multiplier must belong to the set");
    if (contains(inverse(a), alphabet))
        throw std::invalid_argument("the multiplier's inverse may not belong to the set");
}

WhiteheadAutomorphism WhiteheadAutomorphism::inverted(const Alphabet& alphabet) const {
    std::vector<Letter> set;
    for (int s = 0; s < alphabet.letter_count(); ++s) {
        const Letter x = alphabet.letter_at(s);
        if (x == multiplier) continue;
        if (x == inverse(multiplier)) {
            set.push_back(x);
            continue;
        }
        if (in_set[static_cast<std::size_t>(s)]) set.push_back(x);
    }
    return WhiteheadAutomorphism(inverse(multiplier), set, alphabet);
}

Word apply_whitehead(const WhiteheadAutomorphism& phi, const Word& w, const Alphabet& alphabet) {
    const Letter a = phi.multiplier;
    std::vector<Letter> out;
    out.reserve(3 * w.length());
    const auto push = [&out](Letter x) {
        if (!out.empty() && out.back() == inverse(x)) {
            out.pop_back();
        } else {
            out.push_back(x);
        }
    };
    for (Letter x : w) {
        if (x == a || x == inverse(a)) {
            push(x);
            continue;
        }
        const bool xin = phi.contains(x, alphabet);
        const bool xinvin = phi.contains(inverse(x), alphabet);
        if (xin && xinvin) {
            push(inverse(a));
            push(x);
            push(a);
        } else if (xin) {
            push(x);
            push(a);
        } else if (xinvin) {
            push(inverse(a));
            push(x);
        } else {
            push(x);
        }
    }
    return Word::trusted(std::move(out));
}

std::vector<WhiteheadAutomorphism> enumerate_whitehead(const Alphabet& alphabet) {
    std::vector<WhiteheadAutomorphism> out;
    const int r = alphabet.rank;
    const int others = 2 * r - 2;
    out.reserve(static_cast<std::size_t>(2 * r) << others);
    for (int s = 0; s < alphabet.letter_count(); ++s) {
        const Letter a = alphabet.letter_at(s);
        std::vector<Letter> rest;
        for (int t = 0; t < alphabet.letter_count(); ++t) {
            const Letter x = alphabet.letter_at(t);
            if (x != a && x != inverse(a)) rest.push_back(x);
        }
        for (std::uint32_t mask = 0; mask < (1u << others); ++mask) {
            std::vector<Letter> set{a};
            for (int j = 0; j < others; ++j) {
                if (mask & (1u << j)) set.push_back(rest[static_cast<std::size_t>(j)]);
            }
            out.emplace_back(a, set, alphabet);
        }
    }
    return out;
}

bool is_primitive_whitehead(const Word& w, const Alphabet& alphabet) {
    Word core = cyclic_core(w).core;
    if (core.length() <= 1) return core.length() == 1;
    const std::vector<WhiteheadAutomorphism> autos = enumerate_whitehead(alphabet);
    bool improved = true;
    while (improved && core.length() > 1) {
        improved = false;
        for (const WhiteheadAutomorphism& phi : autos) {
            const Word image = cyclic_core(apply_whitehead(phi, core, alphabet)).core;
            if (image.length() < core.length()) {
                core = image;
                improved = true;
                break;  // first improvement, then rescan from the start
            }
        }
    }
    return core.length() == 1;
}

}  // namespace fg
