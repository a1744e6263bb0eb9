#include "fg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace fg {

Alphabet::Alphabet(int r) : rank(r) {
    if (r < 1) throw std::invalid_argument("alphabet rank must be >= 1");
}

namespace {

bool reduced(const std::vector<Letter>& ls) {
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (ls[i] == 0) return false;
        if (i + 1 < ls.size() && ls[i + 1] == inverse(ls[i])) return false;
    }
    return true;
}

}  // namespace

Word Word::checked(std::vector<Letter> letters) {
    if (!reduced(letters)) throw std::invalid_argument("word is not freely reduced");
    return trusted(std::move(letters));
}

Word Word::trusted(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    return w;
}

int Word::max_index() const {
    int m = 0;
    for (Letter a : letters_) m = std::max(m, std::abs(a));
    return m;
}

bool Word::cyclically_reduced() const {
    if (letters_.size() < 2) return true;
    return letters_.back() != inverse(letters_.front());
}

Word reduce(const std::vector<Letter>& seq) {
    std::vector<Letter> out;
    out.reserve(seq.size());
    for (Letter a : seq) {
        if (a == 0) throw std::invalid_argument("letter index 0 is not a letter");
        if (!out.empty() && out.back() == inverse(a)) {
            out.pop_back();
        } else {
            out.push_back(a);
        }
    }
    return Word::trusted(std::move(out));
}

Word invert(const Word& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
        out.push_back(inverse(*it));
    }
    return Word::trusted(std::move(out));
}

Word concat_reduce(const Word& u, const Word& v) {
    std::size_t cancel = 0;
    while (cancel < u.length() && cancel < v.length() &&
           u[u.length() - 1 - cancel] == inverse(v[cancel])) {
        ++cancel;
    }
    std::vector<Letter> out;
    out.reserve(u.length() + v.length() - 2 * cancel);
    out.insert(out.end(), u.begin(), u.end() - static_cast<std::ptrdiff_t>(cancel));
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(cancel), v.end());
    return Word::trusted(std::move(out));
}

CoreDecomposition cyclic_core(const Word& u) {
    std::size_t lo = 0;
    std::size_t hi = u.length();  // core = [lo, hi)
    while (hi - lo >= 3 && u[hi - 1] == inverse(u[lo])) {
        ++lo;
        --hi;
    }
    CoreDecomposition d;
    d.conjugator = Word::trusted({u.begin(), u.begin() + static_cast<std::ptrdiff_t>(lo)});
    d.core = Word::trusted({u.begin() + static_cast<std::ptrdiff_t>(lo),
                            u.begin() + static_cast<std::ptrdiff_t>(hi)});
    return d;
}

namespace {

enum class ScanKind { proper_prefix, prefix, equal };

PrefixScan scan(const Word& u, const Word& v, ScanKind kind) {
    PrefixScan s;
    std::size_t i = 0;
    const std::size_t nu = u.length(), nv = v.length();
    while (i < nu && i < nv) {
        ++s.comparisons;
        if (u[i] != v[i]) return s;  // mismatch, result false
        ++i;
    }
    switch (kind) {
        case ScanKind::proper_prefix: s.result = (i == nu && nu < nv); break;
        case ScanKind::prefix: s.result = (i == nu); break;
        case ScanKind::equal: s.result = (nu == nv); break;
    }
    return s;
}

}  // namespace

PrefixScan is_proper_prefix_counted(const Word& u, const Word& v) {
    return scan(u, v, ScanKind::proper_prefix);
}

PrefixScan is_prefix_counted(const Word& u, const Word& v) {
    return scan(u, v, ScanKind::prefix);
}

PrefixScan equals_counted(const Word& u, const Word& v) {
    return scan(u, v, ScanKind::equal);
}

bool is_proper_prefix(const Word& u, const Word& v) { return is_proper_prefix_counted(u, v).result; }
bool is_prefix(const Word& u, const Word& v) { return is_prefix_counted(u, v).result; }

std::vector<Letter> parse_letters(std::string_view text) {
    // Strip surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return {};

    const bool textual = std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c));
    });

    std::vector<Letter> out;
    if (textual) {
        out.reserve(text.size());
        for (char c : text) {
            if (c >= 'a' && c <= 'z') out.push_back(c - 'a' + 1);
            else if (c >= 'A' && c <= 'Z') out.push_back(-(c - 'A' + 1));
            else throw std::invalid_argument(std::string("bad letter '") + c + "'");
        }
    } else {
        std::istringstream in{std::string(text)};
        long v = 0;
        while (in >> v) {
            if (v == 0) throw std::invalid_argument("letter index 0 is not a letter");
            out.push_back(static_cast<Letter>(v));
        }
        if (!in.eof()) throw std::invalid_argument("bad numeric word: " + std::string(text));
    }
    return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet, bool auto_reduce) {
    std::vector<Letter> ls = parse_letters(text);
    for (Letter a : ls) {
        if (!alphabet.contains(a)) {
            throw std::invalid_argument("letter " + format_letter(a, 0) +
                                        " out of range for rank " + std::to_string(alphabet.rank));
        }
    }
    if (auto_reduce) return reduce(ls);
    return Word::checked(std::move(ls));
}

std::string format_letter(Letter a, int rank) {
    if (rank <= 26 && std::abs(a) <= 26) {
        char c = static_cast<char>((a > 0 ? 'a' : 'A') + std::abs(a) - 1);
        return std::string(1, c);
    }
    return std::to_string(a);
}

std::string format_word(const Word& w, int rank) {
    std::string out;
    if (rank <= 26 && w.max_index() <= 26) {
        for (Letter a : w) out += format_letter(a, rank);
    } else {
        for (std::size_t i = 0; i < w.length(); ++i) {
            if (i) out += ' ';
            out += std::to_string(w[i]);
        }
    }
    return out;
}

std::string format_word(const Word& w) { return format_word(w, w.max_index()); }

std::string format_xword(const Word& x) {
    std::string out;
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (i) out += ' ';
        Letter a = x[i];
        out += (a > 0 ? "x" : "X") + std::to_string(std::abs(a));
    }
    return out;
}

Word expand_in_basis(const Word& xword, const std::vector<Word>& basis) {
    Word out;
    for (Letter a : xword) {
        const std::size_t i = static_cast<std::size_t>(std::abs(a));
        if (i < 1 || i > basis.size()) {
            throw std::out_of_range("basis index " + std::to_string(a) + " out of range");
        }
        out = concat_reduce(out, a > 0 ? basis[i - 1] : invert(basis[i - 1]));
    }
    return out;
}

}  // namespace fg
