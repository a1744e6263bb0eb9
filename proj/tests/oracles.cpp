#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "fg/whitehead.hpp"

namespace fg::oracle {

namespace {

void extend(const Alphabet& alphabet, std::vector<Letter>& prefix, int n,
            const std::function<void(const Word&)>& visit) {
    if (static_cast<int>(prefix.size()) == n) {
        visit(Word::checked(prefix));
        return;
    }
    for (int s = 0; s < alphabet.letter_count(); ++s) {
        const Letter a = alphabet.letter_at(s);
        if (!prefix.empty() && a == inverse(prefix.back())) continue;
        prefix.push_back(a);
        extend(alphabet, prefix, n, visit);
        prefix.pop_back();
    }
}

}  // namespace

void enumerate_reduced(const Alphabet& alphabet, int n,
                       const std::function<void(const Word&)>& visit) {
    std::vector<Letter> prefix;
    extend(alphabet, prefix, n, visit);
}

std::vector<Word> all_reduced(const Alphabet& alphabet, int n) {
    std::vector<Word> out;
    enumerate_reduced(alphabet, n, [&out](const Word& w) { out.push_back(w); });
    return out;
}

std::uint64_t count_reduced_brute(const Alphabet& alphabet, int n) {
    std::uint64_t count = 0;
    enumerate_reduced(alphabet, n, [&count](const Word&) { ++count; });
    return count;
}

std::uint64_t count_cyclically_reduced_brute(const Alphabet& alphabet, int n) {
    std::uint64_t count = 0;
    enumerate_reduced(alphabet, n, [&count](const Word& w) {
        if (w.cyclically_reduced()) ++count;
    });
    return count;
}

bool ctp_brute(const std::vector<Word>& tuple, int d) {
    if (d < 1) return false;
    std::vector<Word> prefixes;
    for (const Word& w : tuple) {
        if (static_cast<int>(w.length()) <= 2 * d) return false;
        prefixes.push_back(Word::trusted({w.begin(), w.begin() + d}));
        const Word wi = invert(w);
        prefixes.push_back(Word::trusted({wi.begin(), wi.begin() + d}));
    }
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        for (std::size_t j = i + 1; j < prefixes.size(); ++j) {
            if (prefixes[i] == prefixes[j]) return false;
        }
    }
    return true;
}

std::optional<int> has_ctp_brute(const std::vector<Word>& tuple) {
    if (tuple.empty()) return std::nullopt;
    std::size_t mu = tuple.front().length();
    for (const Word& w : tuple) mu = std::min(mu, w.length());
    for (int d = (static_cast<int>(mu) - 1) / 2; d >= 1; --d) {
        if (ctp_brute(tuple, d)) return d;
    }
    return std::nullopt;
}

namespace {

// Least representative among all rotations of the core and of its inverse;
// primitivity is invariant under conjugation and inversion.
std::vector<Letter> canonical_cyclic(const Word& core) {
    std::vector<Letter> best;
    bool first = true;
    for (int pass = 0; pass < 2; ++pass) {
        const Word base = (pass == 0) ? core : invert(core);
        const std::size_t n = base.length();
        for (std::size_t shift = 0; shift < std::max<std::size_t>(n, 1); ++shift) {
            std::vector<Letter> rot;
            rot.reserve(n);
            for (std::size_t i = 0; i < n; ++i) rot.push_back(base[(i + shift) % n]);
            if (first || rot < best) {
                best = std::move(rot);
                first = false;
            }
            if (n == 0) break;
        }
    }
    return best;
}

}  // namespace

bool primitive_by_orbit_search(const Word& w, const Alphabet& alphabet) {
    const Word start = cyclic_core(w).core;
    if (start.length() <= 1) return start.length() == 1;

    const auto autos = enumerate_whitehead(alphabet);
    std::set<std::vector<Letter>> visited;
    std::queue<Word> frontier;
    visited.insert(canonical_cyclic(start));
    frontier.push(start);
    while (!frontier.empty()) {
        const Word u = frontier.front();
        frontier.pop();
        if (u.length() == 1) return true;
        for (const auto& phi : autos) {
            const Word v = cyclic_core(apply_whitehead(phi, u, alphabet)).core;
            if (v.length() > u.length()) continue;  // non-increasing closure
            auto key = canonical_cyclic(v);
            if (visited.insert(std::move(key)).second) frontier.push(v);
        }
    }
    return false;
}

double chi_square_uniform(const std::vector<std::uint64_t>& observed) {
    std::uint64_t total = 0;
    for (std::uint64_t c : observed) total += c;
    const double expected = static_cast<double>(total) / static_cast<double>(observed.size());
    double stat = 0.0;
    for (std::uint64_t c : observed) {
        const double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

}  // namespace fg::oracle
