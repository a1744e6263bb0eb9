#pragma once

#include <cstdint>
#include <optional>

#include "fg/ctp.hpp"
#include "fg/whitehead.hpp"
#include "fg/word.hpp"

namespace fg {

/// g(n) = n - log(n^4 r^6) / log(2r-1); may be negative for small n.
double shpilrain_threshold(int n, int r);

struct PrimitivityReport {
    enum class Route { short_core, obstruction, whitehead_fallback };

    bool primitive = false;
    Route route = Route::whitehead_fallback;
    int obstruction_step = 0;            // edge insertion index that fired, 0 otherwise
    std::uint64_t edges_added = 0;       // insertion steps performed
    std::uint64_t cutvertex_checks = 0;
    std::uint64_t automorphisms_applied = 0;

    friend bool operator==(const PrimitivityReport&, const PrimitivityReport&) = default;
};

/// Constant-average-time primitivity test: short cyclic cores go straight to
/// the Whitehead reducer; otherwise the Whitehead graph of the core is grown
/// one edge at a time and the word is declared non-primitive the moment the
/// graph is connected without a cut vertex.
PrimitivityReport is_primitive_shpilrain(const Word& u, const Alphabet& alphabet);

struct RPrimReport {
    bool member = false;
    std::optional<Word> expression;           // x_0 over `basis` when member
    std::vector<Word> basis;
    std::optional<bool> primitive_in_subgroup;  // set iff member
    MembershipReport::Path membership_path = MembershipReport::Path::fallback;
    std::optional<PrimitivityReport> primitivity;
};

/// Membership (fast or fallback path) followed by the primitivity test on
/// the basis expression, run in the free group on that basis.
RPrimReport relative_primitivity(const Word& w0, const std::vector<Word>& tuple,
                                 const DepthPolicy& policy, const Alphabet& alphabet);

}  // namespace fg
