#include "fg/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fg/primitivity.hpp"
#include "fg/random.hpp"

namespace fg {

namespace {

std::string format_cell(double v, bool integral) {
    char buf[64];
    if (integral) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.9g", v);
    }
    return buf;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[static_cast<std::size_t>(i)]);
    }
    return out;
}

double mean_of(const std::vector<std::uint64_t>& v) {
    double s = 0.0;
    for (std::uint64_t x : v) s += static_cast<double>(x);
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double p99_of(std::vector<std::uint64_t> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t idx =
        static_cast<std::size_t>(std::ceil(0.99 * static_cast<double>(v.size()))) - 1;
    return static_cast<double>(v[std::min(idx, v.size() - 1)]);
}

std::vector<std::string> config_meta(const ExperimentConfig& c) {
    std::ostringstream line;
    line << "name=" << c.name << " rank=" << c.rank << " k=" << c.k << " samples=" << c.samples
         << " seed=" << c.seed << " policy=" << c.policy.str() << " lengths=" << join_ints(c.lengths)
         << " w0_lengths=" << join_ints(c.w0_lengths) << " ells=" << join_ints(c.ells);
    return {"fgt bench v1", line.str()};
}

std::vector<Word> sample_tuple(const Alphabet& alpha, int k, int n, Rng& rng) {
    std::vector<Word> tuple;
    tuple.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const int len = static_cast<int>(rng.between(1, n));
        tuple.push_back(sample_uniform_reduced(alpha, len, rng));
    }
    return tuple;
}

Table ctp_failure(const ExperimentConfig& c) {
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},        {"d", true},          {"samples", true},
                 {"failures", true}, {"fail_rate", false}, {"bound", false}};
    for (int n : c.lengths) {
        const int d = c.policy.eval(n, c.k, c.rank);
        const int d_half = c.policy.eval(std::max(2, n / 2), c.k, c.rank);
        std::uint64_t failures = 0;
        for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
            Rng rng = derived_rng(c.seed, static_cast<std::uint64_t>(n), trial);
            const std::vector<Word> tuple = sample_tuple(alpha, c.k, n, rng);
            if (!check_ctp(tuple, d, alpha)) ++failures;
        }
        t.rows.push_back({static_cast<double>(n), static_cast<double>(d),
                          static_cast<double>(c.samples), static_cast<double>(failures),
                          static_cast<double>(failures) / static_cast<double>(c.samples),
                          ctp_failure_probability_bound(c.k, c.rank, d_half)});
    }
    return t;
}

Table ppp_cost(const ExperimentConfig& c) {
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},
                 {"samples", true},
                 {"mean_comparisons", false},
                 {"p99_comparisons", true},
                 {"bound", false}};
    for (int n : c.lengths) {
        std::vector<std::uint64_t> comparisons;
        comparisons.reserve(c.samples);
        for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
            Rng rng = derived_rng(c.seed, static_cast<std::uint64_t>(n), trial);
            const Word u = sample_uniform_reduced(alpha, n, rng);
            const Word v = sample_uniform_reduced(alpha, n, rng);
            comparisons.push_back(is_proper_prefix_counted(u, v).comparisons);
        }
        t.rows.push_back({static_cast<double>(n), static_cast<double>(c.samples),
                          mean_of(comparisons), p99_of(std::move(comparisons)), 2.0});
    }
    return t;
}

Table core_tail(const ExperimentConfig& c) {
    if (c.ells.empty()) throw std::invalid_argument("core-tail needs at least one ell");
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},          {"ell", true},       {"samples", true},
                 {"tail_count", true}, {"tail_rate", false}, {"bound", false}};
    for (int n : c.lengths) {
        std::vector<std::uint64_t> tail(c.ells.size(), 0);
        for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
            Rng rng = derived_rng(c.seed, static_cast<std::uint64_t>(n), trial);
            const Word w = sample_uniform_reduced(alpha, n, rng);
            const int core_len = static_cast<int>(cyclic_core(w).core.length());
            for (std::size_t e = 0; e < c.ells.size(); ++e) {
                if (core_len <= n - 2 * c.ells[e]) ++tail[e];
            }
        }
        for (std::size_t e = 0; e < c.ells.size(); ++e) {
            const int ell = c.ells[e];
            t.rows.push_back({static_cast<double>(n), static_cast<double>(ell),
                              static_cast<double>(c.samples), static_cast<double>(tail[e]),
                              static_cast<double>(tail[e]) / static_cast<double>(c.samples),
                              1.5 * std::pow(static_cast<double>(2 * c.rank - 1), -ell)});
        }
    }
    return t;
}

Table mpd_cost(const ExperimentConfig& c) {
    if (c.w0_lengths.empty()) throw std::invalid_argument("mpd-cost needs at least one w0 length");
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},       {"m", true},
                 {"k", true},       {"d", true},
                 {"samples", true}, {"mean_letters", false},
                 {"p99_letters", true}, {"kd", true}};
    for (int n : c.lengths) {
        const int d = c.policy.eval(n, c.k, c.rank);
        for (int m : c.w0_lengths) {
            std::vector<std::uint64_t> letters;
            letters.reserve(c.samples);
            for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
                Rng rng = derived_rng(c.seed,
                                      static_cast<std::uint64_t>(n) * 1000003u +
                                          static_cast<std::uint64_t>(m),
                                      trial);
                // Condition on the fast-path gate of the instance actually drawn.
                std::vector<Word> tuple;
                for (int attempt = 0;; ++attempt) {
                    if (attempt > 1000000) throw std::runtime_error("ctp conditioning stalled");
                    tuple = sample_tuple(alpha, c.k, n, rng);
                    std::size_t hi = 0, lo = tuple.front().length();
                    for (const Word& w : tuple) {
                        hi = std::max(hi, w.length());
                        lo = std::min(lo, w.length());
                    }
                    if (hi < 2 || 2 * lo <= hi) continue;
                    const int da = c.policy.eval(static_cast<int>(hi), c.k, c.rank);
                    if (check_ctp(tuple, da, alpha)) break;
                }
                const Word w0 = sample_uniform_reduced(alpha, m, rng);
                const MembershipReport rep = membership_mpd(w0, tuple, c.policy, alpha);
                letters.push_back(rep.letters_examined);
            }
            t.rows.push_back({static_cast<double>(n), static_cast<double>(m),
                              static_cast<double>(c.k), static_cast<double>(d),
                              static_cast<double>(c.samples), mean_of(letters),
                              p99_of(std::move(letters)), static_cast<double>(c.k) * d});
        }
    }
    return t;
}

Table shpilrain_flat(const ExperimentConfig& c) {
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},
                 {"samples", true},
                 {"mean_edges_added", false},
                 {"p99_edges_added", true},
                 {"mean_cutvertex_checks", false},
                 {"obstruction_rate", false}};
    for (int n : c.lengths) {
        std::vector<std::uint64_t> edges;
        std::vector<std::uint64_t> checks;
        edges.reserve(c.samples);
        checks.reserve(c.samples);
        std::uint64_t obstructions = 0;
        for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
            Rng rng = derived_rng(c.seed, static_cast<std::uint64_t>(n), trial);
            const Word w = sample_uniform_reduced(alpha, n, rng);
            const PrimitivityReport rep = is_primitive_shpilrain(w, alpha);
            edges.push_back(rep.edges_added);
            checks.push_back(rep.cutvertex_checks);
            if (rep.route == PrimitivityReport::Route::obstruction) ++obstructions;
        }
        t.rows.push_back({static_cast<double>(n), static_cast<double>(c.samples), mean_of(edges),
                          p99_of(std::move(edges)), mean_of(checks),
                          static_cast<double>(obstructions) / static_cast<double>(c.samples)});
    }
    return t;
}

Table cutvertex_decay(const ExperimentConfig& c) {
    const Alphabet alpha(c.rank);
    Table t;
    t.meta = config_meta(c);
    t.columns = {{"n", true},
                 {"samples", true},
                 {"fail_count", true},
                 {"fail_rate", false},
                 {"bound_decay", false}};
    for (int n : c.lengths) {
        if (n < 2) throw std::invalid_argument("cutvertex-decay needs n >= 2");
        std::uint64_t failures = 0;
        for (std::uint64_t trial = 0; trial < c.samples; ++trial) {
            Rng rng = derived_rng(c.seed, static_cast<std::uint64_t>(n), trial);
            const Word w = sample_uniform_reduced(alpha, n, rng);
            if (!connected_without_cutvertex(whitehead_graph(w, false, alpha))) ++failures;
        }
        const double alpha_bound = 1.0 - 0.5 / (static_cast<double>(c.rank) * c.rank);
        t.rows.push_back({static_cast<double>(n), static_cast<double>(c.samples),
                          static_cast<double>(failures),
                          static_cast<double>(failures) / static_cast<double>(c.samples),
                          std::pow(alpha_bound, n)});
    }
    return t;
}

}  // namespace

std::string Table::csv() const {
    std::string out;
    for (const std::string& m : meta) {
        out += "# ";
        out += m;
        out += '\n';
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i].name;
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_cell(row[i], columns[i].integral);
        }
        out += '\n';
    }
    return out;
}

int Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i].name == name) return static_cast<int>(i);
    }
    throw std::out_of_range("no column named " + name);
}

double Table::cell(std::size_t row, const std::string& column) const {
    return rows.at(row).at(static_cast<std::size_t>(column_index(column)));
}

Table run_experiment(const ExperimentConfig& config) {
    if (config.samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (config.rank < 2) throw std::invalid_argument("experiments require rank >= 2");
    if (config.lengths.empty()) throw std::invalid_argument("no lengths given");
    if (config.name == "ctp-failure") return ctp_failure(config);
    if (config.name == "ppp-cost") return ppp_cost(config);
    if (config.name == "core-tail") return core_tail(config);
    if (config.name == "mpd-cost") return mpd_cost(config);
    if (config.name == "shpilrain-flat") return shpilrain_flat(config);
    if (config.name == "cutvertex-decay") return cutvertex_decay(config);
    throw std::invalid_argument("unknown experiment: " + config.name);
}

std::vector<std::string> experiment_names() {
    return {"ctp-failure", "ppp-cost", "core-tail", "mpd-cost", "shpilrain-flat", "cutvertex-decay"};
}

}  // namespace fg
