#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficient i multiplies a^i. The leading coefficient is nonzero unless the
 * polynomial is identically zero, in which case the coefficient list is empty.
 */

#include "ibayes/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ibayes {

class ExactPoly {
public:
    ExactPoly() = default;
    explicit ExactPoly(std::vector<Rational> coefficients);
    ExactPoly(std::initializer_list<Rational> coefficients);

    static ExactPoly constant(const Rational& c);
    /// c * a^power
    static ExactPoly monomial(std::size_t power, const Rational& c = 1);
    /// (a + shift)^power expanded.
    static ExactPoly shifted_power(const Rational& shift, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Zero beyond the stored range.
    Rational coefficient(std::size_t power) const;
    void set_coefficient(std::size_t power, const Rational& c);
    bool has_integer_coefficients() const;

    Rational evaluate(const Rational& at) const;
    double evaluate(double at) const;
    Extended evaluate(const Extended& at) const;
    /// Sign of p(at) computed exactly.
    int sign_at(const Rational& at) const { return evaluate(at).sign(); }

    /// Antiderivative with zero constant term.
    ExactPoly antiderivative() const;
    ExactPoly derivative() const;
    /// Exact definite integral over [lo, hi].
    Rational integrate(const Rational& lo, const Rational& hi) const;
    /// p(a) -> p(1 - a)
    ExactPoly reflect() const;

    ExactPoly& operator+=(const ExactPoly& rhs);
    ExactPoly& operator-=(const ExactPoly& rhs);
    ExactPoly& operator*=(const ExactPoly& rhs);
    ExactPoly& operator*=(const Rational& scale);

    friend ExactPoly operator+(ExactPoly lhs, const ExactPoly& rhs) { return lhs += rhs; }
    friend ExactPoly operator-(ExactPoly lhs, const ExactPoly& rhs) { return lhs -= rhs; }
    friend ExactPoly operator*(ExactPoly lhs, const ExactPoly& rhs) { return lhs *= rhs; }
    friend ExactPoly operator*(ExactPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend ExactPoly operator*(const Rational& lhs, ExactPoly rhs) { return rhs *= lhs; }
    ExactPoly operator-() const;

    friend bool operator==(const ExactPoly& lhs, const ExactPoly& rhs) {
        return lhs.coeffs_ == rhs.coeffs_;
    }

    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

ExactPoly pow(const ExactPoly& base, unsigned exponent);

/// Exact integral of poly over (0, 1): sum of c_i / (i + 1).
Rational integrate_poly_01(const ExactPoly& poly);

} // namespace ibayes
