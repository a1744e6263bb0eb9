#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fg/bench.hpp"
#include "fg/ctp.hpp"

using namespace fg;

namespace {

ExperimentConfig small(const std::string& name) {
    ExperimentConfig c;
    c.name = name;
    c.rank = 2;
    c.k = 2;
    c.samples = 200;
    c.seed = 99;
    c.lengths = {20, 40};
    c.w0_lengths = {50};
    c.ells = {1, 2, 3};
    return c;
}

}  // namespace

TEST_CASE("identical configs give byte-identical CSV") {
    for (const std::string& name : experiment_names()) {
        const ExperimentConfig c = small(name);
        CHECK(run_experiment(c).csv() == run_experiment(c).csv());
    }
}

TEST_CASE("a different seed changes the data") {
    ExperimentConfig a = small("ppp-cost");
    ExperimentConfig b = a;
    b.seed = 100;
    CHECK(run_experiment(a).csv() != run_experiment(b).csv());
}

TEST_CASE("csv structure") {
    const Table t = run_experiment(small("ctp-failure"));
    const std::string csv = t.csv();
    CHECK(csv.rfind("# fgt bench v1\n", 0) == 0);
    CHECK(csv.find("name=ctp-failure") != std::string::npos);
    CHECK(csv.find("seed=99") != std::string::npos);
    CHECK(csv.find("n,d,samples,failures,fail_rate,bound") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);  // LF only
    CHECK(t.rows.size() == 2);
}

TEST_CASE("rates live in [0,1] and echo the bound formulas") {
    const ExperimentConfig c = small("ctp-failure");
    const Table t = run_experiment(c);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const double rate = t.cell(i, "fail_rate");
        CHECK(rate >= 0.0);
        CHECK(rate <= 1.0);
        const int n = static_cast<int>(t.cell(i, "n"));
        const int d_half = c.policy.eval(std::max(2, n / 2), c.k, c.rank);
        CHECK(t.cell(i, "bound") ==
              doctest::Approx(ctp_failure_probability_bound(c.k, c.rank, d_half)));
    }
}

TEST_CASE("core-tail rows sweep the ells") {
    const Table t = run_experiment(small("core-tail"));
    CHECK(t.rows.size() == 6);  // two lengths, three ells
    CHECK(t.cell(0, "ell") == 1);
    CHECK(t.cell(2, "ell") == 3);
    // tail probabilities shrink in ell
    CHECK(t.cell(0, "tail_rate") >= t.cell(2, "tail_rate"));
}

TEST_CASE("mpd-cost rows report the policy depth") {
    ExperimentConfig c = small("mpd-cost");
    c.lengths = {40};
    const Table t = run_experiment(c);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.cell(0, "d") == c.policy.eval(40, c.k, c.rank));
    CHECK(t.cell(0, "kd") == c.k * c.policy.eval(40, c.k, c.rank));
    CHECK(t.cell(0, "mean_letters") > 0.0);
}

TEST_CASE("cut-vertex failure rate decays like alpha(r)^n with alpha below the bound") {
    ExperimentConfig c = small("cutvertex-decay");
    c.lengths = {15, 25};
    c.samples = 200000;
    c.seed = 4242;
    const Table t = run_experiment(c);
    const double p15 = t.cell(0, "fail_rate");
    const double p25 = t.cell(1, "fail_rate");
    REQUIRE(p25 > 0.0);
    CHECK(p25 < p15);
    // fitted geometric ratio over ten steps of n; alpha(2) is about 0.854
    const double ratio = std::pow(p25 / p15, 0.1);
    CHECK(ratio < 1.0 - 0.5 / (2.0 * 2.0));
}

TEST_CASE("config validation") {
    ExperimentConfig c = small("nope");
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = small("ppp-cost");
    c.rank = 1;
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = small("core-tail");
    c.ells.clear();
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    c = small("ppp-cost");
    c.lengths.clear();
    CHECK_THROWS_AS(run_experiment(c), std::invalid_argument);
    CHECK_THROWS_AS(Table{}.column_index("x"), std::out_of_range);
}
