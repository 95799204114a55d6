#include "ibayes/conjugate.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace ibayes;

namespace {

// Admissible (alpha0, beta0, a, b) with beta0 > b - a, so 0 < c < 1 unless a = b and x = n.
struct Config {
    BetaPrior prior;
    Characteristic ch;
    BinomialObs obs;
};

Config random_config(oracle::Gen& gen) {
    for (;;) {
        const Rational a(gen.integer(0, 6), gen.integer(1, 4));
        const Rational b = a + Rational(gen.integer(0, 8), gen.integer(1, 4));
        const Rational alpha0 = a + Rational(gen.integer(1, 20), gen.integer(1, 5));
        const Rational beta0 = (b - a) + Rational(gen.integer(1, 20), gen.integer(1, 5));
        const int n = static_cast<int>(gen.integer(1, 12));
        const int x = static_cast<int>(gen.integer(0, n));
        Characteristic ch(a, b);
        if (ch.admissible(alpha0, beta0)) {
            return {BetaPrior(alpha0, beta0), ch, BinomialObs(n, x)};
        }
    }
}

} // namespace

TEST_CASE("beta-binomial posterior mean") {
    const BinomialObs one_success(1, 1);
    CHECK(beta_binomial_posterior_mean(BetaPrior(1, 1), one_success) == Rational(2, 3));
    CHECK(beta_binomial_posterior_mean(BetaPrior(Rational(1, 2), Rational(1, 2)), one_success) == Rational(3, 4));
    for (int x = 1; x <= 5; ++x) {
        CHECK(beta_binomial_posterior_mean(BetaPrior(3, 3), BinomialObs(2 * x, x)) == Rational(1, 2));
    }
}

TEST_CASE("theorem1_limit") {
    CHECK(theorem1_limit(Characteristic(0, 0), BinomialObs(10, 3)) == Rational(3, 10));
    CHECK(theorem1_limit(Characteristic(1, 2), BinomialObs(1, 1)) == Rational(2, 3));
    CHECK(theorem1_limit(Characteristic(Rational(1, 2), 1), BinomialObs(4, 2)) == Rational(1, 2));
}

TEST_CASE("zero steps keep only the starting point") {
    const auto trace = iterate_binomial_characteristic(BetaPrior(2, 3), Characteristic::mode(), BinomialObs(4, 1), 0);
    REQUIRE(trace.alphas.size() == 1);
    REQUIRE(trace.estimates.size() == 1);
    CHECK(trace.alphas[0] == Rational(2));
    CHECK(trace.estimates[0] == Rational(2 + 1, 2 + 3 + 4));
}

TEST_CASE("expectation replacement converges to the MLE") {
    const auto trace = iterate_binomial_characteristic(BetaPrior(1, 1), Characteristic::expectation(), BinomialObs(2, 1), 60);
    CHECK(trace.c == Rational(1, 2));
    CHECK(std::abs(trace.estimates.back().to_double() - 0.5) < 1e-15);

    const Estimate e = characteristic_iterative_limit(BetaPrior(1, 1), Characteristic::expectation(), BinomialObs(2, 1));
    CHECK(e.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(e.method == Method::FixedPoint);
}

TEST_CASE("mode replacement converges to the uniform-prior estimate") {
    for (const auto& prior : {BetaPrior(2, 3), BetaPrior(Rational(3, 2), Rational(5, 4)), BetaPrior(7, 2)}) {
        const auto trace = iterate_binomial_characteristic(prior, Characteristic::mode(), BinomialObs(1, 1), 200);
        CHECK(std::abs(trace.estimates.back().to_double() - 2.0 / 3.0) < 1e-10);
    }
}

TEST_CASE("every traced step satisfies the replacement equation exactly") {
    oracle::Gen gen(99);
    for (int i = 0; i < 30; ++i) {
        const Config cfg = random_config(gen);
        const auto trace = iterate_binomial_characteristic(cfg.prior, cfg.ch, cfg.obs, 25);
        for (std::size_t m = 1; m < trace.alphas.size(); ++m) {
            REQUIRE(cfg.ch.value(trace.alphas[m], trace.beta0) == trace.estimates[m - 1]);
            REQUIRE(trace.estimates[m] ==
                    beta_binomial_posterior_mean(BetaPrior(trace.alphas[m], trace.beta0), cfg.obs));
        }
    }
}

TEST_CASE("closed form equals the recurrence exactly") {
    oracle::Gen gen(1234);
    for (int i = 0; i < 40; ++i) {
        const Config cfg = random_config(gen);
        const auto trace = iterate_binomial_characteristic(cfg.prior, cfg.ch, cfg.obs, 50);
        for (long m = 0; m <= 50; ++m) {
            REQUIRE(trace.estimates[static_cast<std::size_t>(m)] ==
                    characteristic_closed_form(cfg.prior, cfg.ch, cfg.obs, m));
        }
    }
    SUBCASE("a = b, x = n branch") {
        const BetaPrior prior(3, 2);
        const Characteristic ch(1, 1);
        const BinomialObs obs(3, 3);
        CHECK(contraction_ratio(prior.beta, ch, obs) == Rational(1));
        const auto trace = iterate_binomial_characteristic(prior, ch, obs, 30);
        for (long m = 0; m <= 30; ++m) {
            REQUIRE(trace.estimates[static_cast<std::size_t>(m)] == characteristic_closed_form(prior, ch, obs, m));
        }
    }
}

TEST_CASE("alpha_m summation form matches the recurrence") {
    // a = b = 0: alpha_m = (alpha + x) c^m + x sum_{k=1}^{m-1} c^k
    const BetaPrior prior(Rational(5, 2), 3);
    const BinomialObs obs(7, 2);
    const auto trace = iterate_binomial_characteristic(prior, Characteristic::expectation(), obs, 20);
    for (unsigned m = 1; m <= 20; ++m) {
        Rational tail;
        for (unsigned k = 1; k + 1 <= m; ++k) {
            tail += pow(trace.c, k);
        }
        REQUIRE(trace.alphas[m] == (prior.alpha + Rational(obs.x)) * pow(trace.c, m) + Rational(obs.x) * tail);
    }
}

TEST_CASE("distance to the limit decreases monotonically") {
    oracle::Gen gen(5);
    for (int i = 0; i < 20; ++i) {
        Config cfg = random_config(gen);
        const Rational c = contraction_ratio(cfg.prior.beta, cfg.ch, cfg.obs);
        if (!(c < Rational(1)) || c > Rational(8, 10)) {
            continue;
        }
        const auto trace = iterate_binomial_characteristic(cfg.prior, cfg.ch, cfg.obs, 200);
        const Rational limit = theorem1_limit(cfg.ch, cfg.obs);
        for (std::size_t m = 1; m < trace.estimates.size(); ++m) {
            const Rational prev = abs(trace.estimates[m - 1] - limit);
            const Rational cur = abs(trace.estimates[m] - limit);
            REQUIRE((cur < prev || prev.is_zero()));
        }
        CHECK(std::abs(trace.estimates.back().to_double() - limit.to_double()) < 1e-10);
    }
}

TEST_CASE("limit does not depend on the hyperparameters") {
    const BinomialObs obs(6, 4);
    const Characteristic ch(Rational(1, 2), Rational(3, 2));
    const double tol = 1e-12;
    const Estimate first = characteristic_iterative_limit(BetaPrior(1, 2), ch, obs, tol);
    const Estimate second = characteristic_iterative_limit(BetaPrior(9, Rational(7, 3)), ch, obs, tol);
    CHECK(std::abs(first.value - second.value) < 2 * tol * 10);
    CHECK(first.value == doctest::Approx(theorem1_limit(ch, obs).to_double()).epsilon(1e-10));
}

TEST_CASE("degenerate characteristic is reported") {
    // (alpha - a)/(alpha + beta0 - b) with alpha0 <= a
    CHECK_THROWS_AS(iterate_binomial_characteristic(BetaPrior(1, 3), Characteristic(2, 3), BinomialObs(2, 1), 5),
                    DegenerateStep);
    // beta0 <= b - a pushes the characteristic to >= 1
    try {
        (void)iterate_binomial_characteristic(BetaPrior(3, 1), Characteristic(0, 2), BinomialObs(2, 1), 5);
        FAIL("expected DegenerateStep");
    } catch (const DegenerateStep& e) {
        CHECK(e.step() == 0);
    }
}

TEST_CASE("no convergence is asserted when c = 1") {
    try {
        (void)characteristic_iterative_limit(BetaPrior(3, 2), Characteristic(1, 1), BinomialObs(3, 3), 1e-12, 1000);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        CHECK(e.iterations() == 1000);
        CHECK(e.last_value() < 1.0);
    }
}

TEST_CASE("conjugate posterior means") {
    CHECK(conjugate_posterior_mean(ConjugateModel::poisson(1, 1), SampleStats{3, 6}) == doctest::Approx(7.0 / 4.0));
    CHECK(conjugate_posterior_mean(ConjugateModel::normal_mean(1.5, 0.0, 2.0), SampleStats{4, 100}) ==
          doctest::Approx(1.5));
    CHECK(conjugate_posterior_mean(ConjugateModel::normal_precision(1, 1, 0), SampleStats{2, 0, 2}) ==
          doctest::Approx(1.0));
    CHECK(conjugate_posterior_mean(ConjugateModel::exponential(2, 3), SampleStats{4, 8}) ==
          doctest::Approx(10.0 / 6.0));

    CHECK_THROWS_AS(conjugate_posterior_mean(ConjugateModel::poisson(1, 1), SampleStats{0, 0}), InvalidStats);
    CHECK_THROWS_AS(conjugate_posterior_mean(ConjugateModel::poisson(1, 1), SampleStats{2, -1}), InvalidStats);
    CHECK_THROWS_AS(conjugate_posterior_mean(ConjugateModel::exponential(1, 2), SampleStats{2, 0}), InvalidStats);
    CHECK_THROWS_AS(ConjugateModel::exponential(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ConjugateModel::normal_mean(0, 1, 0), std::invalid_argument);
}

TEST_CASE("conjugate iterative limits recover the MLE") {
    CHECK(conjugate_iterative_limit(ConjugateModel::poisson(1, 1), SampleStats{3, 6}).value ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(conjugate_iterative_limit(ConjugateModel::exponential(1, 2), SampleStats{4, 8}).value ==
          doctest::Approx(2.0).epsilon(1e-10));
    CHECK(conjugate_iterative_limit(ConjugateModel::normal_precision(1, 1, 0), SampleStats{2, 0, 4}).value ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(conjugate_iterative_limit(ConjugateModel::normal_mean(0, 1, 1), SampleStats{5, -3}).value ==
          doctest::Approx(-0.6).epsilon(1e-10));

    CHECK_THROWS_AS(conjugate_iterative_limit(ConjugateModel::normal_precision(1, 1, 0), SampleStats{2, 0, 0}),
                    InvalidStats);
    CHECK_THROWS_AS(conjugate_iterative_limit(ConjugateModel::normal_mean(0, 0, 1), SampleStats{2, 1}), InvalidStats);
    CHECK_THROWS_AS(conjugate_iterative_limit(ConjugateModel::poisson(1, 1), SampleStats{3, 6}, 1e-12, 2),
                    NoConvergence);
}

TEST_CASE("randomized conjugate statistics") {
    oracle::Gen gen(77);
    const double tol = 1e-12;
    for (int i = 0; i < 100; ++i) {
        const long n = gen.integer(1, 30);
        const std::vector<ConjugateModel> models{
            ConjugateModel::poisson(gen.real(0.1, 5), gen.real(0.1, 5)),
            ConjugateModel::exponential(gen.real(0.1, 5), gen.real(1.1, 6)),
            ConjugateModel::normal_mean(gen.real(-3, 3), gen.real(0.1, 4), gen.real(0.1, 4)),
            ConjugateModel::normal_precision(gen.real(0.1, 5), gen.real(0.1, 5), 0.0),
        };
        const SampleStats stats{n, gen.real(0.5, 40), gen.real(0.5, 40)};
        for (const auto& model : models) {
            const double mle = conjugate_mle(model, stats);
            const Estimate e = conjugate_iterative_limit(model, stats, tol);
            REQUIRE(std::abs(e.value - mle) < 1e-8);
        }
    }
}

TEST_CASE("sample statistics from raw data") {
    const auto stats = SampleStats::from_sample({1.0, 2.0, 4.0}, 1.0);
    CHECK(stats.n == 3);
    CHECK(stats.sum_x == 7.0);
    CHECK(stats.sum_sq_dev == 0.0 + 1.0 + 9.0);
}
