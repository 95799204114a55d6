#include "ibayes/conjugate.hpp"

#include <cmath>
#include <numeric>

namespace ibayes {

Rational beta_binomial_posterior_mean(const BetaPrior& prior, const BinomialObs& obs) {
    return (prior.alpha + Rational(obs.x)) / (prior.alpha + prior.beta + Rational(obs.n));
}

Rational contraction_ratio(const Rational& beta0, const Characteristic& ch, const BinomialObs& obs) {
    return (beta0 - (ch.b - ch.a)) / (beta0 + Rational(obs.n - obs.x));
}

IterationTrace iterate_binomial_characteristic(const BetaPrior& prior, const Characteristic& ch,
                                               const BinomialObs& obs, long steps) {
    return iterate_binomial_characteristic(prior, prior.beta, ch, obs, steps);
}

IterationTrace iterate_binomial_characteristic(const BetaPrior& prior, const Rational& beta0,
                                               const Characteristic& ch, const BinomialObs& obs, long steps) {
    if (steps < 0) {
        throw std::invalid_argument("iterate_binomial_characteristic: negative step count");
    }
    if (beta0.sign() <= 0) {
        throw std::invalid_argument("iterate_binomial_characteristic: beta0 must be positive");
    }
    if (!ch.admissible(prior.alpha, beta0)) {
        throw DegenerateStep(0, "initial characteristic outside (0, 1)");
    }

    const Rational x(obs.x);
    const Rational n(obs.n);

    IterationTrace trace;
    trace.beta0 = beta0;
    trace.c = contraction_ratio(beta0, ch, obs);
    trace.alphas.reserve(static_cast<std::size_t>(steps) + 1);
    trace.estimates.reserve(static_cast<std::size_t>(steps) + 1);

    Rational alpha = prior.alpha;
    Rational estimate = (alpha + x) / (alpha + beta0 + n);
    trace.alphas.push_back(alpha);
    trace.estimates.push_back(estimate);

    for (long m = 1; m <= steps; ++m) {
        // (alpha - a) = e (alpha + beta0 - b)  =>  alpha = (a + e (beta0 - b)) / (1 - e)
        alpha = (ch.a + estimate * (beta0 - ch.b)) / (Rational(1) - estimate);
        if (alpha <= ch.a) {
            throw DegenerateStep(m, "alpha_m <= a");
        }
        estimate = (alpha + x) / (alpha + beta0 + n);
        trace.alphas.push_back(alpha);
        trace.estimates.push_back(estimate);
    }
    return trace;
}

Rational characteristic_closed_form(const BetaPrior& prior, const Characteristic& ch, const BinomialObs& obs,
                                    long m) {
    const Rational& alpha = prior.alpha;
    const Rational& beta0 = prior.beta;
    const Rational x(obs.x);
    const Rational n(obs.n);
    const Rational mm(m);

    if (ch.a == ch.b && obs.x == obs.n) {
        const Rational grow = mm * (ch.a + n);
        return (alpha + n + grow) / (alpha + n + beta0 + grow);
    }
    const Rational c = contraction_ratio(beta0, ch, obs);
    const Rational cm = pow(c, static_cast<unsigned>(m));
    const Rational head = (alpha + x) * (Rational(1) - c) * cm;
    return (head + (ch.a + x) * (Rational(1) - cm)) / (head - (ch.a + x) * cm + n + ch.b);
}

Rational theorem1_limit(const Characteristic& ch, const BinomialObs& obs) {
    const Rational den = Rational(obs.n) + ch.b;
    if (den.sign() <= 0) {
        throw std::invalid_argument("theorem1_limit: n + b must be positive");
    }
    return (Rational(obs.x) + ch.a) / den;
}

Estimate characteristic_iterative_limit(const BetaPrior& prior, const Characteristic& ch, const BinomialObs& obs,
                                        double tol, long max_iter) {
    if (!(tol > 0.0) || max_iter < 1) {
        throw std::invalid_argument("characteristic_iterative_limit: tol > 0 and max_iter >= 1 required");
    }
    if (!ch.admissible(prior.alpha, prior.beta)) {
        throw DegenerateStep(0, "initial characteristic outside (0, 1)");
    }
    const double a = ch.a.to_double();
    const double b = ch.b.to_double();
    const double beta0 = prior.beta.to_double();
    const double n = obs.n;
    const double x = obs.x;
    const bool contracting = std::abs(contraction_ratio(prior.beta, ch, obs).to_double()) < 1.0;

    double alpha = prior.alpha.to_double();
    double estimate = (alpha + x) / (alpha + beta0 + n);
    double delta = 0.0;
    for (long m = 1; m <= max_iter; ++m) {
        alpha = (a + estimate * (beta0 - b)) / (1.0 - estimate);
        if (alpha <= a) {
            throw DegenerateStep(m, "alpha_m <= a");
        }
        const double next = (alpha + x) / (alpha + beta0 + n);
        delta = std::abs(next - estimate);
        estimate = next;
        if (delta < tol) {
            if (!contracting) {
                break;
            }
            return Estimate{estimate, Method::FixedPoint, m, delta, std::nullopt};
        }
    }
    throw NoConvergence(estimate, delta, max_iter);
}

std::string_view to_string(ConjugateFamily family) {
    switch (family) {
    case ConjugateFamily::Poisson: return "poisson";
    case ConjugateFamily::Exponential: return "exponential";
    case ConjugateFamily::NormalMeanKnownVar: return "normal-mean";
    case ConjugateFamily::NormalPrecisionKnownMean: return "normal-precision";
    }
    return "unknown";
}

ConjugateModel ConjugateModel::poisson(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("poisson model: alpha, beta must be positive");
    }
    return {ConjugateFamily::Poisson, alpha, beta};
}

ConjugateModel ConjugateModel::exponential(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 1.0)) {
        throw std::invalid_argument("exponential model: alpha > 0 and beta > 1 required");
    }
    return {ConjugateFamily::Exponential, alpha, beta};
}

ConjugateModel ConjugateModel::normal_mean(double alpha, double prior_variance, double sigma0_sq) {
    if (!(sigma0_sq > 0.0) || !(prior_variance >= 0.0) || !std::isfinite(alpha)) {
        throw std::invalid_argument("normal-mean model: sigma0^2 > 0 and prior variance >= 0 required");
    }
    return {ConjugateFamily::NormalMeanKnownVar, alpha, prior_variance, sigma0_sq, 0.0};
}

ConjugateModel ConjugateModel::normal_precision(double alpha, double beta, double mu0) {
    if (!(alpha > 0.0) || !(beta > 0.0)) {
        throw std::invalid_argument("normal-precision model: alpha, beta must be positive");
    }
    return {ConjugateFamily::NormalPrecisionKnownMean, alpha, beta, 0.0, mu0};
}

double ConjugateModel::prior_expectation() const {
    switch (family) {
    case ConjugateFamily::Poisson: return beta / alpha;
    case ConjugateFamily::Exponential: return alpha / (beta - 1.0);
    case ConjugateFamily::NormalMeanKnownVar: return alpha;
    case ConjugateFamily::NormalPrecisionKnownMean: return beta / alpha;
    }
    return 0.0;
}

SampleStats SampleStats::from_sample(const std::vector<double>& xs, double mu0) {
    SampleStats stats{static_cast<long>(xs.size())};
    stats.sum_x = std::accumulate(xs.begin(), xs.end(), 0.0);
    for (double v : xs) {
        stats.sum_sq_dev += (v - mu0) * (v - mu0);
    }
    return stats;
}

namespace {

void validate(const ConjugateModel& model, const SampleStats& stats) {
    if (stats.n < 1) {
        throw InvalidStats("sample size must be >= 1");
    }
    switch (model.family) {
    case ConjugateFamily::Poisson:
        if (stats.sum_x < 0.0) {
            throw InvalidStats("poisson: sum of counts must be nonnegative");
        }
        break;
    case ConjugateFamily::Exponential:
        if (!(stats.sum_x > 0.0)) {
            throw InvalidStats("exponential: sum of observations must be positive");
        }
        break;
    case ConjugateFamily::NormalMeanKnownVar:
        if (!std::isfinite(stats.sum_x)) {
            throw InvalidStats("normal-mean: sum must be finite");
        }
        break;
    case ConjugateFamily::NormalPrecisionKnownMean:
        if (stats.sum_sq_dev < 0.0) {
            throw InvalidStats("normal-precision: sum of squared deviations must be nonnegative");
        }
        break;
    }
}

// Sets the free hyperparameter so that the prior expectation equals `target`.
ConjugateModel with_expectation(ConjugateModel model, double target) {
    switch (model.family) {
    case ConjugateFamily::Poisson: model.beta = model.alpha * target; break;
    case ConjugateFamily::Exponential: model.alpha = target * (model.beta - 1.0); break;
    case ConjugateFamily::NormalMeanKnownVar: model.alpha = target; break;
    case ConjugateFamily::NormalPrecisionKnownMean: model.beta = model.alpha * target; break;
    }
    return model;
}

} // namespace

double conjugate_posterior_mean(const ConjugateModel& model, const SampleStats& stats) {
    validate(model, stats);
    const double n = static_cast<double>(stats.n);
    switch (model.family) {
    case ConjugateFamily::Poisson: return (model.beta + stats.sum_x) / (model.alpha + n);
    case ConjugateFamily::Exponential: return (model.alpha + stats.sum_x) / (model.beta + n - 1.0);
    case ConjugateFamily::NormalMeanKnownVar:
        return (model.alpha * model.sigma0_sq + stats.sum_x * model.beta) / (model.sigma0_sq + n * model.beta);
    case ConjugateFamily::NormalPrecisionKnownMean:
        return (2.0 * model.beta + n) / (2.0 * model.alpha + stats.sum_sq_dev);
    }
    return 0.0;
}

double conjugate_mle(const ConjugateModel& model, const SampleStats& stats) {
    validate(model, stats);
    if (model.family == ConjugateFamily::NormalPrecisionKnownMean) {
        if (!(stats.sum_sq_dev > 0.0)) {
            throw InvalidStats("normal-precision: MLE requires positive sum of squared deviations");
        }
        return static_cast<double>(stats.n) / stats.sum_sq_dev;
    }
    return stats.sum_x / static_cast<double>(stats.n);
}

Estimate conjugate_iterative_limit(const ConjugateModel& model, const SampleStats& stats, double tol,
                                   long max_iter) {
    if (!(tol > 0.0) || max_iter < 1) {
        throw std::invalid_argument("conjugate_iterative_limit: tol > 0 and max_iter >= 1 required");
    }
    validate(model, stats);
    if (model.family == ConjugateFamily::NormalPrecisionKnownMean && !(stats.sum_sq_dev > 0.0)) {
        throw InvalidStats("normal-precision: iteration requires positive sum of squared deviations");
    }
    if (model.family == ConjugateFamily::NormalMeanKnownVar && !(model.beta > 0.0)) {
        throw InvalidStats("normal-mean: iteration requires positive prior variance");
    }

    double estimate = conjugate_posterior_mean(model, stats);
    double delta = 0.0;
    for (long m = 1; m <= max_iter; ++m) {
        const double next = conjugate_posterior_mean(with_expectation(model, estimate), stats);
        delta = std::abs(next - estimate);
        estimate = next;
        if (delta < tol) {
            return Estimate{estimate, Method::FixedPoint, m, delta, std::nullopt};
        }
    }
    throw NoConvergence(estimate, delta, max_iter);
}

} // namespace ibayes
