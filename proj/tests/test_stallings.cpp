#include <doctest.h>

#include <algorithm>
#include <string>

#include "fg/random.hpp"
#include "fg/stallings.hpp"

using namespace fg;

namespace {

Word W(const char* text, int rank = 3) { return parse_word(text, Alphabet(rank)); }

std::vector<Word> gens(std::initializer_list<const char*> texts, int rank = 3) {
    std::vector<Word> out;
    for (const char* t : texts) out.push_back(W(t, rank));
    return out;
}

}  // namespace

TEST_CASE("folding the single-loop subgroups") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"a"}, 2), alpha);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.target(0, 1) == 0);
    CHECK(g.subgroup_rank() == 1);
}

TEST_CASE("folding <aa, b>") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"aa", "b"}, 2), alpha);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(g.target(0, 1) == 1);   // a: 0 -> 1
    CHECK(g.target(1, 1) == 0);   // a: 1 -> 0
    CHECK(g.target(0, 2) == 0);   // b loop at the root
    CHECK(g.target(1, 2) == -1);  // no b edge at the other vertex
    CHECK(g.subgroup_rank() == 2);
    CHECK_FALSE(g.finite_index().has_value());
}

TEST_CASE("folding <aa, b, abA> is complete of index 2") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"aa", "b", "abA"}, 2), alpha);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 4);
    CHECK(g.subgroup_rank() == 3);
    REQUIRE(g.finite_index().has_value());
    CHECK(*g.finite_index() == 2);
}

TEST_CASE("the whole group has index 1") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"a", "b"}, 2), alpha);
    REQUIRE(g.finite_index().has_value());
    CHECK(*g.finite_index() == 1);
}

TEST_CASE("ctp tuples are bases: rank of <aba, bab> is 2") {
    const Alphabet alpha(2);
    CHECK(StallingsGraph::build(gens({"aba", "bab"}, 2), alpha).subgroup_rank() == 2);
}

TEST_CASE("empty generators are dropped") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"", "a"}, 2), alpha);
    CHECK(g == StallingsGraph::build(gens({"a"}, 2), alpha));
    const StallingsGraph trivial = StallingsGraph::build({}, alpha);
    CHECK(trivial.vertex_count() == 1);
    CHECK(trivial.edge_count() == 0);
    CHECK(trivial.subgroup_rank() == 0);
}

TEST_CASE("spanning basis of the worked examples") {
    const Alphabet alpha(2);
    SUBCASE("<a>") {
        const StallingsGraph g = StallingsGraph::build(gens({"a"}, 2), alpha);
        const SpanningBasis b = spanning_basis(g);
        REQUIRE(b.words.size() == 1);
        CHECK(b.words[0] == W("a", 2));
    }
    SUBCASE("<aa, b>") {
        const StallingsGraph g = StallingsGraph::build(gens({"aa", "b"}, 2), alpha);
        const SpanningBasis b = spanning_basis(g);
        REQUIRE(b.words.size() == 2);
        CHECK(b.words[0] == W("aa", 2));
        CHECK(b.words[1] == W("b", 2));
    }
    SUBCASE("<aa, b, abA>") {
        const StallingsGraph g = StallingsGraph::build(gens({"aa", "b", "abA"}, 2), alpha);
        CHECK(spanning_basis(g).words.size() == 3);
    }
}

TEST_CASE("membership traces through <aa, b>") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"aa", "b"}, 2), alpha);
    const SpanningBasis b = spanning_basis(g);

    const auto aab = membership_mp(W("aab", 2), g, b);
    REQUIRE(aab.has_value());
    CHECK(*aab == Word::checked({1, 2}));  // x1 x2 with x1 = aa, x2 = b
    CHECK(expand_in_basis(*aab, b.words) == W("aab", 2));

    CHECK_FALSE(membership_mp(W("aba", 2), g, b).has_value());

    const auto empty = membership_mp(W("", 2), g, b);
    REQUIRE(empty.has_value());
    CHECK(empty->empty());
}

TEST_CASE("every generator is accepted") {
    Rng rng(41);
    const Alphabet alpha(2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Word> tuple;
        const int k = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < k; ++i) {
            tuple.push_back(sample_uniform_reduced(alpha, 1 + static_cast<int>(rng.below(6)), rng));
        }
        const StallingsGraph g = StallingsGraph::build(tuple, alpha);
        const SpanningBasis b = spanning_basis(g);
        for (const Word& w : tuple) {
            CHECK(membership_mp(w, g, b).has_value());
        }
    }
}

TEST_CASE("membership round-trips every short basis expression") {
    Rng rng(43);
    const Alphabet alpha(2);
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Word> tuple;
        const int k = 2 + static_cast<int>(rng.below(2));
        for (int i = 0; i < k; ++i) {
            tuple.push_back(sample_uniform_reduced(alpha, 1 + static_cast<int>(rng.below(6)), rng));
        }
        const StallingsGraph g = StallingsGraph::build(tuple, alpha);
        const SpanningBasis basis = spanning_basis(g);
        const int bk = static_cast<int>(basis.words.size());
        if (bk == 0) continue;
        const Alphabet xalpha(bk);
        // all reduced expressions of length <= 4 over the spanning basis
        std::vector<Word> xwords{Word()};
        for (std::size_t head = 0; head < xwords.size(); ++head) {
            const Word x = xwords[head];
            if (x.length() == 4) continue;
            for (int s = 0; s < xalpha.letter_count(); ++s) {
                const Letter a = xalpha.letter_at(s);
                if (!x.empty() && a == inverse(x[x.length() - 1])) continue;
                std::vector<Letter> next = x.letters();
                next.push_back(a);
                xwords.push_back(Word::checked(std::move(next)));
            }
        }
        for (const Word& x : xwords) {
            const Word w0 = expand_in_basis(x, basis.words);
            const auto back = membership_mp(w0, g, basis);
            REQUIRE(back.has_value());
            CHECK(*back == x);
        }
    }
}

TEST_CASE("folding is confluent under permutation and inversion of generators") {
    Rng rng(47);
    const Alphabet alpha(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Word> tuple;
        const int k = 2 + static_cast<int>(rng.below(2));
        std::size_t total = 0;
        for (int i = 0; i < k; ++i) {
            tuple.push_back(sample_uniform_reduced(alpha, 1 + static_cast<int>(rng.below(8)), rng));
            total += tuple.back().length();
        }
        const StallingsGraph g = StallingsGraph::build(tuple, alpha);
        CHECK(g.vertex_count() <= static_cast<int>(total));

        std::vector<Word> mutated = tuple;
        for (Word& w : mutated) {
            if (rng.below(2)) w = invert(w);
        }
        for (std::size_t i = mutated.size(); i > 1; --i) {
            std::swap(mutated[i - 1], mutated[rng.below(i)]);
        }
        CHECK(StallingsGraph::build(mutated, alpha) == g);
    }
}

TEST_CASE("dot export shape") {
    const Alphabet alpha(2);
    const StallingsGraph g = StallingsGraph::build(gens({"aa", "b"}, 2), alpha);
    const std::string dot = g.to_dot();
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("doublecircle") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);
    CHECK(dot.find("label=\"b\"") != std::string::npos);
    CHECK(std::count(dot.begin(), dot.end(), '\n') >= 5);
}
