#pragma once

// Quadratic risk of binomial point estimators, computed by exact summation
// over the sample space.

#include "ibayes/types.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ibayes {

enum class EstimatorTag { MLE, UniformBayes, JeffreysBayes, IterativeBayesTriangle };

std::string_view to_string(EstimatorTag tag);

struct EstimatorSpec {
    EstimatorTag tag;
    std::function<double(const BinomialObs&)> estimate;

    static EstimatorSpec of(EstimatorTag tag);
    /// Estimates for x = 0..n.
    std::vector<double> tabulate(int n) const;
};

/// MLE, uniform, Jeffreys, triangle iterative Bayes, in that order.
std::vector<EstimatorSpec> standard_estimators();

struct RiskColumn {
    EstimatorTag tag;
    std::vector<double> mse;
};

struct RiskTable {
    int n = 0;
    std::vector<double> p_grid;
    std::vector<RiskColumn> columns;
};

/// sum_x C(n,x) p^x (1-p)^(n-x) (est[x] - p)^2
double mse_at(std::span<const double> estimates, double p);
/// Exact rational counterpart of mse_at.
Rational mse_at(std::span<const Rational> estimates, const Rational& p);

RiskTable exact_risk(const EstimatorSpec& est, int n, const std::vector<double>& p_grid);

/// grid_size evenly spaced points on [0, 1], endpoints included.
std::vector<double> even_grid(int grid_size);

RiskTable compare(int n, int grid_size = 101);

struct MonteCarloRisk {
    double mse;
    double std_error;
    long samples;
};

/// Sampling estimate of the same risk; deterministic for a given seed.
MonteCarloRisk monte_carlo_risk(const EstimatorSpec& est, int n, double p, long samples, std::uint64_t seed);

} // namespace ibayes
