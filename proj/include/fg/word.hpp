#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace fg {

// A letter of the symmetrized alphabet: nonzero signed index, inverse = sign flip.
using Letter = std::int32_t;

constexpr Letter inverse(Letter a) { return -a; }

/// Symmetrized alphabet of a free group of rank r (letters -r..-1, 1..r).
struct Alphabet {
    int rank;

    explicit Alphabet(int r);

    int letter_count() const { return 2 * rank; }
    bool contains(Letter a) const { return a != 0 && -rank <= a && a <= rank; }

    // Canonical slot order: a1 < a1^-1 < a2 < a2^-1 < ...
    int slot(Letter a) const { return 2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0); }
    Letter letter_at(int slot) const {
        return (slot % 2 == 0) ? (slot / 2 + 1) : -(slot / 2 + 1);
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

/// A freely reduced word. The class invariant (no letter adjacent to its
/// inverse, no zero letters) is enforced at every construction site.
class Word {
public:
    Word() = default;

    /// Adopts a sequence after verifying it is freely reduced; throws otherwise.
    static Word checked(std::vector<Letter> letters);

    /// Adopts a sequence the caller guarantees to be reduced (internal fast path).
    static Word trusted(std::vector<Letter> letters);

    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Largest generator index used; 0 for the empty word.
    int max_index() const;

    bool cyclically_reduced() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

/// Free reduction: the unique reduced word equal to the sequence in F(A).
Word reduce(const std::vector<Letter>& seq);

Word invert(const Word& w);

/// reduce(u v), with cancellation only at the seam.
Word concat_reduce(const Word& u, const Word& v);

/// u = conjugator . core . conjugator^-1 with core cyclically reduced.
struct CoreDecomposition {
    Word conjugator;
    Word core;
};

/// Peels matching first/last letters while length >= 3 and they are inverse.
CoreDecomposition cyclic_core(const Word& u);

// Left-to-right prefix scans stopping at the first mismatch; the counted
// variants report the number of letter comparisons performed.
struct PrefixScan {
    bool result = false;
    std::uint64_t comparisons = 0;
};

PrefixScan is_proper_prefix_counted(const Word& u, const Word& v);
PrefixScan is_prefix_counted(const Word& u, const Word& v);
PrefixScan equals_counted(const Word& u, const Word& v);

bool is_proper_prefix(const Word& u, const Word& v);
bool is_prefix(const Word& u, const Word& v);

// Text format: a..z generators, A..Z inverses (rank <= 26).
// Numeric format: whitespace-separated signed integers.
std::vector<Letter> parse_letters(std::string_view text);

/// Parses either format and validates against the alphabet. Unreduced input
/// is rejected unless auto_reduce is set.
Word parse_word(std::string_view text, const Alphabet& alphabet, bool auto_reduce = false);

std::string format_letter(Letter a, int rank);

/// Text format when the rank permits it, numeric otherwise.
std::string format_word(const Word& w, int rank);
std::string format_word(const Word& w);

/// Basis expressions x1..xk rendered as x1 x2 X1 ... (X = inverse).
std::string format_xword(const Word& x);

/// phi: F(X) -> F(A), x_i -> basis[i-1]; input must be reduced over X.
Word expand_in_basis(const Word& xword, const std::vector<Word>& basis);

}  // namespace fg
