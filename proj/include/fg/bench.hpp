#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fg/ctp.hpp"

namespace fg {

/// A bench run: one experiment name plus the knobs it reads. Unused fields
/// are ignored by experiments that do not sweep them.
struct ExperimentConfig {
    std::string name;
    int rank = 2;
    int k = 2;
    std::vector<int> lengths;      // n sweep
    std::vector<int> w0_lengths;   // m sweep (mpd-cost)
    std::vector<int> ells;         // ell sweep (core-tail)
    DepthPolicy policy{};
    std::uint64_t samples = 1000;
    std::uint64_t seed = 1;
};

/// Aggregated rows plus the metadata echoed into the CSV. Cells are doubles;
/// integral columns are printed without a decimal point so identical configs
/// serialize byte-identically.
struct Table {
    struct Column {
        std::string name;
        bool integral = false;
    };

    std::vector<std::string> meta;  // rendered as '# ...' lines
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;

    std::string csv() const;
    int column_index(const std::string& name) const;
    double cell(std::size_t row, const std::string& column) const;
};

/// Experiments (see README for the row schemas):
///   ctp-failure     empirical d(n)-ctp failure rate vs. the k^2(2r-1)^-d(n/2) shape
///   ppp-cost        letter comparisons of the proper-prefix scan on uniform pairs
///   core-tail       tail of the cyclic core length vs. 1.5 (2r-1)^-ell
///   mpd-cost        letters of w0 examined by the fast membership walk
///   shpilrain-flat  edge insertions of the incremental primitivity test
///   cutvertex-decay fraction of words whose W' is disconnected or has a cut vertex
Table run_experiment(const ExperimentConfig& config);

std::vector<std::string> experiment_names();

}  // namespace fg
