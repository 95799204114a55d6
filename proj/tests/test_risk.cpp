#include "ibayes/risk.hpp"
#include "ibayes/triangle.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ibayes;

namespace {

const RiskColumn& column(const RiskTable& table, EstimatorTag tag) {
    for (const auto& c : table.columns) {
        if (c.tag == tag) {
            return c;
        }
    }
    throw std::logic_error("missing column");
}

} // namespace

TEST_CASE("estimator tables") {
    CHECK(EstimatorSpec::of(EstimatorTag::MLE).tabulate(4) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
    const auto uniform = EstimatorSpec::of(EstimatorTag::UniformBayes).tabulate(1);
    CHECK(uniform[0] == doctest::Approx(1.0 / 3.0));
    CHECK(uniform[1] == doctest::Approx(2.0 / 3.0));
    const auto jeffreys = EstimatorSpec::of(EstimatorTag::JeffreysBayes).tabulate(1);
    CHECK(jeffreys[1] == doctest::Approx(0.75));
    CHECK(EstimatorSpec::of(EstimatorTag::IterativeBayesTriangle).tabulate(1)[1] ==
          doctest::Approx(GoldenConstants::inv_phi));
    CHECK(standard_estimators().size() == 4);
    CHECK(to_string(EstimatorTag::IterativeBayesTriangle) == "iterative_bayes_triangle");
}

TEST_CASE("MSE at n = 1, p = 1/2") {
    const double p = 0.5;
    CHECK(std::abs(mse_at(EstimatorSpec::of(EstimatorTag::MLE).tabulate(1), p) - 0.25) < 1e-15);
    CHECK(std::abs(mse_at(EstimatorSpec::of(EstimatorTag::UniformBayes).tabulate(1), p) - 1.0 / 36.0) < 1e-15);
    const double d = GoldenConstants::inv_phi - 0.5;
    CHECK(std::abs(mse_at(EstimatorSpec::of(EstimatorTag::IterativeBayesTriangle).tabulate(1), p) - d * d) < 1e-15);
    CHECK(std::abs(d * d - 0.0139320225002103) < 1e-15);
}

TEST_CASE("exact rational risk") {
    const std::vector<Rational> mle{Rational(0), Rational(1, 2), Rational(1)};
    CHECK(mse_at(mle, Rational(1, 2)) == Rational(1, 8));
    CHECK(mse_at(mle, Rational(0)) == Rational(0));
    CHECK(mse_at(mle, Rational(1)) == Rational(0));

    oracle::Gen gen(21);
    for (int i = 0; i < 30; ++i) {
        const int n = static_cast<int>(gen.integer(1, 15));
        const auto est = EstimatorSpec::of(static_cast<EstimatorTag>(gen.integer(0, 3))).tabulate(n);
        std::vector<Rational> exact;
        for (double v : est) {
            exact.push_back(Rational::from_double(v));
        }
        const Rational p(gen.integer(0, 100), 100);
        REQUIRE(std::abs(mse_at(est, p.to_double()) - mse_at(exact, p).to_double()) < 1e-12);
    }
}

TEST_CASE("compare table shape and symmetry") {
    const RiskTable table = compare(3, 11);
    CHECK(table.n == 3);
    REQUIRE(table.p_grid.size() == 11);
    CHECK(table.p_grid.front() == 0.0);
    CHECK(table.p_grid.back() == 1.0);
    REQUIRE(table.columns.size() == 4);
    for (const auto& c : table.columns) {
        REQUIRE(c.mse.size() == 11);
        for (std::size_t i = 0; i < c.mse.size(); ++i) {
            REQUIRE(c.mse[i] >= 0.0);
            REQUIRE(std::abs(c.mse[i] - c.mse[c.mse.size() - 1 - i]) < 1e-12);
        }
    }
    const auto& mle = column(table, EstimatorTag::MLE);
    CHECK(mle.mse.front() == 0.0);
    CHECK(mle.mse.back() == 0.0);
    CHECK(even_grid(3) == std::vector<double>{0.0, 0.5, 1.0});
    CHECK_THROWS_AS(even_grid(1), std::invalid_argument);
}

TEST_CASE("estimators are symmetric and ordered for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        const auto ib = EstimatorSpec::of(EstimatorTag::IterativeBayesTriangle).tabulate(n);
        const auto uniform = EstimatorSpec::of(EstimatorTag::UniformBayes).tabulate(n);
        for (int x = 0; x <= n; ++x) {
            const auto i = static_cast<std::size_t>(x);
            const auto j = static_cast<std::size_t>(n - x);
            REQUIRE(std::abs(ib[i] + ib[j] - 1.0) < 1e-12);
            REQUIRE(std::abs(uniform[i] + uniform[j] - 1.0) < 1e-12);
            REQUIRE(std::abs(ib[i] - uniform[i]) < 1.0 / (n + 2));
        }
        const double mle_half = mse_at(EstimatorSpec::of(EstimatorTag::MLE).tabulate(n), 0.5);
        REQUIRE(mse_at(ib, 0.5) < mle_half);
    }
}

TEST_CASE("Monte Carlo risk tracks the exact risk") {
    for (const auto& est : standard_estimators()) {
        for (const double p : {0.1, 0.5, 0.8}) {
            const double exact = mse_at(est.tabulate(5), p);
            const MonteCarloRisk mc = monte_carlo_risk(est, 5, p, 200000, 42);
            CHECK(mc.samples == 200000);
            CHECK(std::abs(mc.mse - exact) < 4 * mc.std_error + 1e-12);
        }
    }
    const auto est = EstimatorSpec::of(EstimatorTag::UniformBayes);
    CHECK(monte_carlo_risk(est, 4, 0.3, 1000, 7).mse == monte_carlo_risk(est, 4, 0.3, 1000, 7).mse);
}
