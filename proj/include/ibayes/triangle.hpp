#pragma once

/**
 * @file triangle.hpp
 * @brief Iterative Bayes estimation of a binomial success probability under
 *        the triangle prior.
 *
 * The mode of the triangle prior is replaced by the posterior mean until the
 * two coincide. The limit p_IB(x) is the unique zero in (0, 1) of the integer
 * polynomial
 *
 *   J_n(a, x) = 2 a^(x+2) sum_r C(n+3, n-x-r) C(x+r, r) (-1)^r a^r
 *               - (n-x+1)(n+3) a + (n-x+1)(x+1),
 *
 * and it always lies in ((x+1)/(n+3), (x+2)/(n+3)). For n = x = 1 the limit is
 * (sqrt(5) - 1)/2, the reciprocal of the golden ratio.
 */

#include "ibayes/poly.hpp"
#include "ibayes/types.hpp"

#include <utility>

namespace ibayes {

struct GoldenConstants {
    static constexpr double phi = 1.6180339887498948482;
    static constexpr double inv_phi = 0.6180339887498948482;
    static Extended phi_extended();
    static Extended inv_phi_extended();
};

double triangle_density(const TrianglePrior& prior, double p);

/// (1 + m + m^2) / (2 (1 + m)), the posterior mean after one success in one trial.
Rational triangle_posterior_mean_n1(const Rational& mode);
double triangle_posterior_mean_n1(double mode);

/**
 * Posterior mean under the triangle prior for a fixed observation, as a
 * function of the mode. All four piecewise integrals are expanded into
 * polynomials once; each evaluation is exact.
 */
class TrianglePosterior {
public:
    explicit TrianglePosterior(const BinomialObs& obs);

    const BinomialObs& observation() const { return obs_; }

    Rational mean(const Rational& mode) const;
    /// The double mode is converted exactly; only the final ratio is rounded.
    double mean(double mode) const;

private:
    BinomialObs obs_;
    // Antiderivatives of p^(x+2)(1-p)^(n-x), p^(x+1)(1-p)^(n-x+1) (numerator)
    // and p^(x+1)(1-p)^(n-x), p^x(1-p)^(n-x+1) (denominator).
    ExactPoly num_left_;
    ExactPoly num_right_;
    ExactPoly den_left_;
    ExactPoly den_right_;
};

Rational triangle_posterior_mean(const Rational& mode, const BinomialObs& obs);
double triangle_posterior_mean(double mode, const BinomialObs& obs);

/// I_n(a, x) = a^(x+2) * integral_0^1 t^(x+1)(1-t)(1-at)^(n-x) dt as a polynomial in a.
ExactPoly in_polynomial(const BinomialObs& obs);
Rational in_value(const Rational& a, const BinomialObs& obs);
double in_value(double a, const BinomialObs& obs);

struct JnPolynomial {
    BinomialObs obs;
    ExactPoly poly;

    Rational operator()(const Rational& a) const { return poly.evaluate(a); }
};

/// Integer-coefficient polynomial whose root in (0, 1) is p_IB(x).
JnPolynomial build_jn(const BinomialObs& obs);

/// (n+3)!/(x!(n-x)!) (1-a) [I_n(1-a, n-x) - I_n(a, x)], expanded.
ExactPoly jn_from_integrals(const BinomialObs& obs);

/// ((x+1)/(n+3), (x+2)/(n+3)); contains p_IB(x) strictly.
std::pair<Rational, Rational> iterative_bayes_bracket(const BinomialObs& obs);

struct RootBracket {
    Rational lo;
    Rational hi;
    Rational root; ///< midpoint of [lo, hi], or the exact zero if one was hit
    long iterations = 0;
    bool exact = false;
};

/**
 * Bisection with exact sign evaluation. Requires strictly opposite signs at
 * lo and hi (BracketFailure otherwise); stops once hi - lo < width or a
 * midpoint is an exact zero.
 */
RootBracket bisect_root(const ExactPoly& poly, Rational lo, Rational hi, const Rational& width);

/// p_IB(x) by bisection on J_n inside the bracket. Width of the final
/// bracket is below tol.
Estimate solve_iterative_bayes(const BinomialObs& obs, double tol = 1e-15);

/// Same root refined to a bracket narrower than 10^-digits and read out in
/// 50-digit binary floating point.
Extended solve_iterative_bayes_extended(const BinomialObs& obs, int digits = 40);

/**
 * Plain replacement iteration mode <- posterior_mean(mode), optionally damped:
 * mode <- (1 - damping) mode + damping posterior_mean(mode).
 * Throws NoConvergence after max_iter steps.
 */
Estimate fixed_point_iterate(const BinomialObs& obs, double mode0, double tol = 1e-14, long max_iter = 10'000,
                             double damping = 1.0);

/// (x+1) a^(x+3) - (x+4) a^(x+2) + (x+4) a - (x+1)
ExactPoly geometric_polynomial(int x);

/// Geometric model (successes before the first failure). x = 0 goes through
/// the negative-binomial mapping.
Estimate geometric_estimate(int x, double tol = 1e-15);

/// Observation x from NB(r, p) behaves as x from B(x + r, p).
Estimate negative_binomial_estimate(int r, int x, double tol = 1e-15);

} // namespace ibayes
