#include "ibayes/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ibayes {

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
    if (den == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("Rational: non-finite double");
    }
    return Rational(mpq_class(v));
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("Rational: empty string");
    }
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            return Rational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) {
            return Rational(BigInt(text, 10));
        }
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+") {
            throw std::invalid_argument("Rational: malformed decimal '" + text + "'");
        }
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, text.size() - dot - 1);
        return Rational(BigInt(digits, 10), scale);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Extended Rational::to_extended() const {
    return Extended(value_.get_num().get_str()) / Extended(value_.get_den().get_str());
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt binomial(std::int64_t m, std::int64_t k) {
    if (m < 0) {
        throw std::domain_error("binomial: m must be nonnegative");
    }
    if (k < 0 || k > m) {
        return 0;
    }
    k = std::min(k, m - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // exact at every step: result is C(m - k + i, i) after division
        result *= static_cast<unsigned long>(m - k + i);
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return result;
}

BigInt factorial(std::int64_t m) {
    if (m < 0) {
        throw std::domain_error("factorial: negative argument");
    }
    BigInt result = 1;
    for (std::int64_t i = 2; i <= m; ++i) {
        result *= static_cast<unsigned long>(i);
    }
    return result;
}

} // namespace ibayes
