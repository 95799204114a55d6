#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars over arbitrary-precision integers.
 *
 * Values are always in lowest terms with a positive denominator. Nothing in
 * this type rounds; conversion to binary floating point is explicit.
 */

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ibayes {

using BigInt = mpz_class;

/// 50 decimal digits; used where a result must be read out beyond double.
using Extended = boost::multiprecision::cpp_bin_float_50;

class Rational {
public:
    Rational() = default;
    Rational(long v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
    Rational(int v) : value_(static_cast<long>(v)) {} // NOLINT(google-explicit-constructor)
    Rational(unsigned long v) : value_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const BigInt& v) : value_(v) {}        // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Exact conversion; every finite double is a dyadic rational.
    static Rational from_double(double v);
    /// Parses "p/q", integers, or plain decimals ("0.439") exactly.
    static Rational parse(const std::string& text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }
    Extended to_extended() const;
    std::string to_string() const { return value_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// C(m, k) by the multiplicative formula; 0 outside 0 <= k <= m.
BigInt binomial(std::int64_t m, std::int64_t k);
BigInt factorial(std::int64_t m);

} // namespace ibayes
