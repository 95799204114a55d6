#include "ibayes/risk.hpp"

#include "ibayes/triangle.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace ibayes {

std::string_view to_string(EstimatorTag tag) {
    switch (tag) {
    case EstimatorTag::MLE: return "mle";
    case EstimatorTag::UniformBayes: return "uniform_bayes";
    case EstimatorTag::JeffreysBayes: return "jeffreys_bayes";
    case EstimatorTag::IterativeBayesTriangle: return "iterative_bayes_triangle";
    }
    return "unknown";
}

EstimatorSpec EstimatorSpec::of(EstimatorTag tag) {
    switch (tag) {
    case EstimatorTag::MLE:
        return {tag, [](const BinomialObs& o) { return static_cast<double>(o.x) / o.n; }};
    case EstimatorTag::UniformBayes:
        return {tag, [](const BinomialObs& o) { return (o.x + 1.0) / (o.n + 2.0); }};
    case EstimatorTag::JeffreysBayes:
        return {tag, [](const BinomialObs& o) { return (o.x + 0.5) / (o.n + 1.0); }};
    case EstimatorTag::IterativeBayesTriangle:
        return {tag, [](const BinomialObs& o) { return solve_iterative_bayes(o).value; }};
    }
    throw std::invalid_argument("unknown estimator tag");
}

std::vector<double> EstimatorSpec::tabulate(int n) const {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) {
        out.push_back(estimate(BinomialObs(n, x)));
    }
    return out;
}

std::vector<EstimatorSpec> standard_estimators() {
    return {EstimatorSpec::of(EstimatorTag::MLE), EstimatorSpec::of(EstimatorTag::UniformBayes),
            EstimatorSpec::of(EstimatorTag::JeffreysBayes), EstimatorSpec::of(EstimatorTag::IterativeBayesTriangle)};
}

double mse_at(std::span<const double> estimates, double p) {
    if (estimates.empty()) {
        throw std::invalid_argument("mse_at: need estimates for x = 0..n");
    }
    const int n = static_cast<int>(estimates.size()) - 1;
    double total = 0.0;
    for (int x = 0; x <= n; ++x) {
        // std::pow(0.0, 0) == 1, so the endpoints p = 0, 1 are handled exactly
        const double weight = binomial(n, x).get_d() * std::pow(p, x) * std::pow(1.0 - p, n - x);
        const double err = estimates[static_cast<std::size_t>(x)] - p;
        total += weight * err * err;
    }
    return total;
}

Rational mse_at(std::span<const Rational> estimates, const Rational& p) {
    if (estimates.empty()) {
        throw std::invalid_argument("mse_at: need estimates for x = 0..n");
    }
    const int n = static_cast<int>(estimates.size()) - 1;
    const Rational q = Rational(1) - p;
    Rational total;
    for (int x = 0; x <= n; ++x) {
        const Rational err = estimates[static_cast<std::size_t>(x)] - p;
        total += Rational(binomial(n, x)) * pow(p, static_cast<unsigned>(x)) * pow(q, static_cast<unsigned>(n - x)) *
                 err * err;
    }
    return total;
}

RiskTable exact_risk(const EstimatorSpec& est, int n, const std::vector<double>& p_grid) {
    if (n < 1) {
        throw std::invalid_argument("exact_risk: n must be >= 1");
    }
    const std::vector<double> estimates = est.tabulate(n);
    RiskColumn column{est.tag, {}};
    column.mse.reserve(p_grid.size());
    for (double p : p_grid) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument("exact_risk: grid points must lie in [0, 1]");
        }
        column.mse.push_back(mse_at(estimates, p));
    }
    return RiskTable{n, p_grid, {std::move(column)}};
}

std::vector<double> even_grid(int grid_size) {
    if (grid_size < 2) {
        throw std::invalid_argument("even_grid: grid_size must be >= 2");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(grid_size));
    const int last = grid_size - 1;
    for (int i = 0; i <= last; ++i) {
        // i/last rather than i*step keeps p and 1-p mirror points exact
        grid.push_back(static_cast<double>(i) / last);
    }
    return grid;
}

RiskTable compare(int n, int grid_size) {
    RiskTable table{n, even_grid(grid_size), {}};
    for (const auto& est : standard_estimators()) {
        table.columns.push_back(std::move(exact_risk(est, n, table.p_grid).columns.front()));
    }
    return table;
}

MonteCarloRisk monte_carlo_risk(const EstimatorSpec& est, int n, double p, long samples, std::uint64_t seed) {
    if (n < 1 || samples < 2 || !(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("monte_carlo_risk: n >= 1, samples >= 2, p in [0, 1] required");
    }
    const std::vector<double> estimates = est.tabulate(n);
    std::mt19937_64 rng(seed);
    std::binomial_distribution<int> draw(n, p);
    double mean = 0.0;
    double m2 = 0.0;
    for (long i = 1; i <= samples; ++i) {
        const double err = estimates[static_cast<std::size_t>(draw(rng))] - p;
        const double loss = err * err;
        const double d = loss - mean;
        mean += d / static_cast<double>(i);
        m2 += d * (loss - mean);
    }
    const double var = m2 / static_cast<double>(samples - 1);
    return {mean, std::sqrt(var / static_cast<double>(samples)), samples};
}

} // namespace ibayes
