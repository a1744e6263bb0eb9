#include "fg/growth.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fg {

TransitionMatrix automaton_matrix(const WhiteheadGraph& g) {
    const int r = g.rank();
    const Alphabet alpha(r);
    TransitionMatrix m;
    m.order = 2 * r;
    m.entries.assign(static_cast<std::size_t>(m.order) * static_cast<std::size_t>(m.order), 0);
    for (int sp = 0; sp < m.order; ++sp) {
        const Letter p = alpha.letter_at(sp);
        for (int sq = 0; sq < m.order; ++sq) {
            const Letter q = alpha.letter_at(sq);
            if (inverse(p) != q && g.has_edge(inverse(p), q)) {
                m.entries[static_cast<std::size_t>(sp) * static_cast<std::size_t>(m.order) +
                          static_cast<std::size_t>(sq)] = 1;
            }
        }
    }
    return m;
}

WhiteheadGraph complete_letter_graph(int r) {
    WhiteheadGraph g(r);
    const Alphabet alpha(r);
    for (int i = 0; i < 2 * r; ++i) {
        for (int j = i + 1; j < 2 * r; ++j) {
            g.add_edge(alpha.letter_at(i), alpha.letter_at(j));
        }
    }
    return g;
}

WhiteheadGraph complete_letter_graph_minus(int r, Letter x, Letter y) {
    WhiteheadGraph g(r);
    const Alphabet alpha(r);
    for (int i = 0; i < 2 * r; ++i) {
        for (int j = i + 1; j < 2 * r; ++j) {
            const Letter u = alpha.letter_at(i);
            const Letter v = alpha.letter_at(j);
            if ((u == x && v == y) || (u == y && v == x)) continue;
            g.add_edge(u, v);
        }
    }
    return g;
}

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw std::overflow_error("path count overflows 64 bits");
    return a + b;
}

}  // namespace

std::uint64_t path_count(const TransitionMatrix& m, int n) {
    if (n < 1) throw std::invalid_argument("path_count needs n >= 1");
    const int d = m.order;
    // row vector of ones times M^(n-1), summed.
    std::vector<std::uint64_t> v(static_cast<std::size_t>(d), 1);
    for (int step = 1; step < n; ++step) {
        std::vector<std::uint64_t> next(static_cast<std::size_t>(d), 0);
        for (int i = 0; i < d; ++i) {
            const std::uint64_t vi = v[static_cast<std::size_t>(i)];
            if (vi == 0) continue;
            for (int j = 0; j < d; ++j) {
                if (m.at(i, j)) {
                    next[static_cast<std::size_t>(j)] =
                        checked_add(next[static_cast<std::size_t>(j)], vi);
                }
            }
        }
        v = std::move(next);
    }
    std::uint64_t total = 0;
    for (std::uint64_t x : v) total = checked_add(total, x);
    return total;
}

double dominant_eigenvalue(const TransitionMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    const int d = m.order;
    std::vector<double> x(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
    std::vector<double> y(static_cast<std::size_t>(d), 0.0);

    const double eps = std::max(tol * tol, 1e-15);
    const std::uint64_t cap = 1000000;
    double prev = std::numeric_limits<double>::infinity();

    for (std::uint64_t it = 0; it < cap; ++it) {
        double norm2 = 0.0, xy = 0.0;
        for (int i = 0; i < d; ++i) {
            double s = 0.0;
            for (int j = 0; j < d; ++j) {
                if (m.at(i, j)) s += x[static_cast<std::size_t>(j)];
            }
            y[static_cast<std::size_t>(i)] = s;
            norm2 += x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
            xy += x[static_cast<std::size_t>(i)] * s;
        }
        const double rayleigh = xy / norm2;

        // Collatz-Wielandt gap: the spectral radius lies between the smallest
        // and largest of the ratios (Mx)_i / x_i, and so does the Rayleigh
        // quotient. A small gap certifies the returned value; a persistent
        // gap (periodic automaton) runs into the iteration cap.
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
        for (int i = 0; i < d; ++i) {
            if (x[static_cast<std::size_t>(i)] > 1e-12) {
                const double ratio = y[static_cast<std::size_t>(i)] / x[static_cast<std::size_t>(i)];
                lo = std::min(lo, ratio);
                hi = std::max(hi, ratio);
            }
        }

        double ynorm = 0.0;
        for (double s : y) ynorm += s * s;
        ynorm = std::sqrt(ynorm);
        if (ynorm == 0.0) return 0.0;  // nilpotent direction exhausted
        for (int i = 0; i < d; ++i) x[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] / ynorm;

        if (hi - lo <= tol && std::abs(rayleigh - prev) <= eps * std::max(1.0, std::abs(rayleigh))) {
            return rayleigh;
        }
        prev = rayleigh;
    }
    throw std::runtime_error("power iteration did not converge (periodic automaton?)");
}

double gaa_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus requires rank >= 2");
    const double t = 2.0 * r + 1.0;
    return 0.5 * (2.0 * r - 3.0 + std::sqrt(t * t - 8.0));
}

double gab_modulus(int r) {
    if (r < 2) throw std::invalid_argument("modulus requires rank >= 2");
    const auto p = [r](double x) {
        return ((x - (2.0 * r - 1.0)) * x) * x + 4.0 * (r - 1.0);
    };
    // The cubic is increasing past its local minimum at 2(2r-1)/3 and the
    // largest root lies in [2(2r-1)/3, 2r-1].
    double lo = 2.0 * (2.0 * r - 1.0) / 3.0;
    double hi = 2.0 * r - 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (p(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double ctp_growth_bound(int k, int mu, int d) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (mu <= 2 * d) throw std::invalid_argument("requires mu > 2d");
    return std::pow(2.0 * k - 1.0, 1.0 / (mu - 2.0 * d));
}

}  // namespace fg
