#pragma once

// Domain types shared by every estimator module.

#include "ibayes/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ibayes {

/// A single observation x from B(n, p).
struct BinomialObs {
    int n;
    int x;

    BinomialObs(int trials, int successes);

    BinomialObs mirrored() const { return {n, n - x}; }
    friend bool operator==(const BinomialObs&, const BinomialObs&) = default;
};

/// Beta(alpha, beta) hyperparameters, held exactly.
struct BetaPrior {
    Rational alpha;
    Rational beta;

    BetaPrior(Rational a, Rational b);
};

/// The replaced characteristic (alpha - a) / (alpha + beta - b).
/// a = b = 0 is the prior expectation, a = 1, b = 2 the mode.
struct Characteristic {
    Rational a;
    Rational b;

    Characteristic(Rational lower, Rational upper);

    static Characteristic expectation() { return {0, 0}; }
    static Characteristic mode() { return {1, 2}; }

    Rational value(const Rational& alpha, const Rational& beta) const;
    /// True iff value(alpha, beta) lies strictly in (0, 1).
    bool admissible(const Rational& alpha, const Rational& beta) const;
};

/// Piecewise-linear density on (0, 1) peaking at `mode`.
class TrianglePrior {
public:
    explicit TrianglePrior(Rational mode);
    explicit TrianglePrior(double mode) : TrianglePrior(Rational::from_double(mode)) {}

    const Rational& mode() const { return mode_; }

    double density(double p) const;
    Rational density(const Rational& p) const;
    /// Exact integral of the density over (0, 1); equals 1.
    Rational total_mass() const;

private:
    Rational mode_;
};

enum class Method { ClosedForm, Bisection, FixedPoint, QuadratureOracle };

std::string_view to_string(Method m);

struct Bracket {
    double lo;
    double hi;
};

struct Estimate {
    double value = 0.0;
    Method method = Method::ClosedForm;
    long iterations = 0;
    double residual = 0.0;
    std::optional<Bracket> bracket;
};

class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A characteristic-replacement step left the admissible region.
class DegenerateStep : public EstimationError {
public:
    DegenerateStep(long step, const std::string& detail);
    long step() const { return step_; }

private:
    long step_;
};

/// Iteration budget exhausted; carries the last iterate.
class NoConvergence : public EstimationError {
public:
    NoConvergence(double last_value, double last_delta, long iterations);
    double last_value() const { return last_value_; }
    double last_delta() const { return last_delta_; }
    long iterations() const { return iterations_; }

private:
    double last_value_;
    double last_delta_;
    long iterations_;
};

/// Expected sign change absent from a bracket that should contain one.
class BracketFailure : public EstimationError {
public:
    using EstimationError::EstimationError;
};

class InvalidStats : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ibayes
