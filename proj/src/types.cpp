#include "ibayes/types.hpp"

#include "ibayes/poly.hpp"

#include <fmt/format.h>

namespace ibayes {

BinomialObs::BinomialObs(int trials, int successes) : n(trials), x(successes) {
    if (n < 1) {
        throw std::invalid_argument("BinomialObs: n must be >= 1");
    }
    if (x < 0 || x > n) {
        throw std::invalid_argument("BinomialObs: x must satisfy 0 <= x <= n");
    }
}

BetaPrior::BetaPrior(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.sign() <= 0 || beta.sign() <= 0) {
        throw std::invalid_argument("BetaPrior: alpha and beta must be positive");
    }
}

Characteristic::Characteristic(Rational lower, Rational upper) : a(std::move(lower)), b(std::move(upper)) {
    if (a.sign() < 0 || b < a) {
        throw std::invalid_argument("Characteristic: requires 0 <= a <= b");
    }
}

Rational Characteristic::value(const Rational& alpha, const Rational& beta) const {
    return (alpha - a) / (alpha + beta - b);
}

bool Characteristic::admissible(const Rational& alpha, const Rational& beta) const {
    const Rational den = alpha + beta - b;
    if (den.is_zero()) {
        return false;
    }
    const Rational v = (alpha - a) / den;
    return v.sign() > 0 && v < Rational(1);
}

TrianglePrior::TrianglePrior(Rational mode) : mode_(std::move(mode)) {
    if (mode_.sign() <= 0 || mode_ >= Rational(1)) {
        throw std::invalid_argument("TrianglePrior: mode must lie strictly in (0, 1)");
    }
}

double TrianglePrior::density(double p) const {
    const double m = mode_.to_double();
    if (p <= 0.0 || p >= 1.0) {
        return 0.0;
    }
    return p <= m ? 2.0 * p / m : 2.0 * (1.0 - p) / (1.0 - m);
}

Rational TrianglePrior::density(const Rational& p) const {
    if (p.sign() <= 0 || p >= Rational(1)) {
        return {};
    }
    return p <= mode_ ? Rational(2) * p / mode_ : Rational(2) * (Rational(1) - p) / (Rational(1) - mode_);
}

Rational TrianglePrior::total_mass() const {
    const Rational one_minus = Rational(1) - mode_;
    const ExactPoly left({Rational(0), Rational(2) / mode_});
    const ExactPoly right({Rational(2) / one_minus, Rational(-2) / one_minus});
    return left.integrate(0, mode_) + right.integrate(mode_, 1);
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Bisection: return "bisection";
    case Method::FixedPoint: return "fixed-point";
    case Method::QuadratureOracle: return "quadrature-oracle";
    }
    return "unknown";
}

DegenerateStep::DegenerateStep(long step, const std::string& detail)
    : EstimationError(fmt::format("degenerate characteristic at step {}: {}", step, detail)), step_(step) {}

NoConvergence::NoConvergence(double last_value, double last_delta, long iterations)
    : EstimationError(fmt::format("no convergence after {} iterations (last value {}, |delta| {})", iterations,
                                  last_value, last_delta)),
      last_value_(last_value), last_delta_(last_delta), iterations_(iterations) {}

} // namespace ibayes
