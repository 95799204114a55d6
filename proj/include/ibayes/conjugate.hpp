#pragma once

/**
 * @file conjugate.hpp
 * @brief Characteristic-replacement iteration under conjugate priors.
 *
 * For the Beta-binomial model the prior characteristic (alpha - a)/(alpha + beta0 - b)
 * is replaced by the current posterior mean at every step, with beta held at
 * beta0. The limit is (x + a)/(n + b). The same scheme applied to the prior
 * expectation of the Poisson, exponential and normal conjugate families
 * recovers the maximum likelihood estimate.
 */

#include "ibayes/types.hpp"

#include <vector>

namespace ibayes {

/// (alpha + x) / (alpha + beta + n)
Rational beta_binomial_posterior_mean(const BetaPrior& prior, const BinomialObs& obs);

struct IterationTrace {
    std::vector<Rational> alphas;    ///< alpha_0 .. alpha_m
    std::vector<Rational> estimates; ///< posterior mean at each alpha_k
    Rational beta0;
    Rational c;                      ///< contraction ratio of alpha_m = c alpha_{m-1} + d
};

/// (beta0 - (b - a)) / (beta0 + n - x)
Rational contraction_ratio(const Rational& beta0, const Characteristic& ch, const BinomialObs& obs);

/**
 * Runs `steps` replacement steps starting from alpha_0 = prior.alpha with
 * beta fixed at prior.beta. Each step solves
 *   (alpha_m - a) / (alpha_m + beta0 - b) = previous posterior mean
 * for alpha_m exactly.
 *
 * Throws DegenerateStep when the starting characteristic is outside (0, 1)
 * or a step yields alpha_m <= a.
 */
IterationTrace iterate_binomial_characteristic(const BetaPrior& prior, const Characteristic& ch,
                                               const BinomialObs& obs, long steps);

/// Same, with beta0 overriding prior.beta.
IterationTrace iterate_binomial_characteristic(const BetaPrior& prior, const Rational& beta0,
                                               const Characteristic& ch, const BinomialObs& obs, long steps);

/// Posterior mean after m steps in closed form (c-power expression, or the
/// linear-in-m form when a = b and x = n). prior.beta plays the role of beta0.
Rational characteristic_closed_form(const BetaPrior& prior, const Characteristic& ch, const BinomialObs& obs,
                                    long m);

/// (x + a) / (n + b)
Rational theorem1_limit(const Characteristic& ch, const BinomialObs& obs);

/// Floating-point replacement iteration run until successive estimates differ
/// by less than tol. Throws NoConvergence when |c| >= 1 or the budget runs out.
Estimate characteristic_iterative_limit(const BetaPrior& prior, const Characteristic& ch, const BinomialObs& obs,
                                        double tol = 1e-12, long max_iter = 1'000'000);

enum class ConjugateFamily { Poisson, Exponential, NormalMeanKnownVar, NormalPrecisionKnownMean };

std::string_view to_string(ConjugateFamily family);

/**
 * A conjugate model from the Poisson / exponential / normal table.
 *
 * Hyperparameter roles follow the usual rate/shape layout:
 *  - Poisson:           Gamma prior, expectation beta/alpha
 *  - Exponential:       inverse-Gamma prior, expectation alpha/(beta - 1), beta > 1
 *  - NormalMeanKnownVar: mu ~ N(alpha, beta) where `beta` is the prior variance
 *  - NormalPrecisionKnownMean: Gamma prior on theta, expectation beta/alpha
 */
struct ConjugateModel {
    ConjugateFamily family;
    double alpha;
    double beta;
    double sigma0_sq = 0.0; ///< NormalMeanKnownVar only
    double mu0 = 0.0;       ///< NormalPrecisionKnownMean only

    static ConjugateModel poisson(double alpha, double beta);
    static ConjugateModel exponential(double alpha, double beta);
    static ConjugateModel normal_mean(double alpha, double prior_variance, double sigma0_sq);
    static ConjugateModel normal_precision(double alpha, double beta, double mu0);

    double prior_expectation() const;
};

struct SampleStats {
    long n;
    double sum_x = 0.0;
    double sum_sq_dev = 0.0; ///< sum (x_i - mu0)^2, NormalPrecisionKnownMean only

    static SampleStats from_sample(const std::vector<double>& xs, double mu0 = 0.0);
};

/// Posterior expectation column. Throws InvalidStats on bad statistics.
double conjugate_posterior_mean(const ConjugateModel& model, const SampleStats& stats);

/// The MLE column: sum/n, or n / sum_sq_dev for the precision model.
double conjugate_mle(const ConjugateModel& model, const SampleStats& stats);

/// Replace the prior expectation by the posterior mean until |delta| < tol.
/// The free hyperparameter is the one that enters the expectation linearly:
/// beta for Poisson and NormalPrecision, alpha for Exponential and NormalMean.
Estimate conjugate_iterative_limit(const ConjugateModel& model, const SampleStats& stats, double tol = 1e-12,
                                   long max_iter = 1'000'000);

} // namespace ibayes
