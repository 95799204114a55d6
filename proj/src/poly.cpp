#include "ibayes/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ibayes {

ExactPoly::ExactPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

ExactPoly::ExactPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

ExactPoly ExactPoly::constant(const Rational& c) { return ExactPoly({c}); }

ExactPoly ExactPoly::monomial(std::size_t power, const Rational& c) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return ExactPoly(std::move(coeffs));
}

ExactPoly ExactPoly::shifted_power(const Rational& shift, std::size_t power) {
    std::vector<Rational> coeffs(power + 1);
    for (std::size_t k = 0; k <= power; ++k) {
        coeffs[k] = Rational(binomial(static_cast<std::int64_t>(power), static_cast<std::int64_t>(k))) *
                    pow(shift, static_cast<unsigned>(power - k));
    }
    return ExactPoly(std::move(coeffs));
}

void ExactPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational ExactPoly::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational();
}

void ExactPoly::set_coefficient(std::size_t power, const Rational& c) {
    if (power >= coeffs_.size()) {
        coeffs_.resize(power + 1);
    }
    coeffs_[power] = c;
    trim();
}

bool ExactPoly::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

Rational ExactPoly::evaluate(const Rational& at) const {
    if (coeffs_.empty()) {
        return {};
    }
    // Horner over a common denominator: sum c_i p^i q^(d-i), divided by q^d.
    const BigInt& p = at.raw().get_num();
    const BigInt& q = at.raw().get_den();
    mpq_class acc = coeffs_.back().raw();
    BigInt q_power = 1;
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
        q_power *= q;
        acc = acc * p + coeffs_[i].raw() * q_power;
    }
    acc /= q_power;
    return Rational(BigInt(acc.get_num()), BigInt(acc.get_den()));
}

double ExactPoly::evaluate(double at) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + it->to_double();
    }
    return acc;
}

Extended ExactPoly::evaluate(const Extended& at) const {
    Extended acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * at + it->to_extended();
    }
    return acc;
}

ExactPoly ExactPoly::antiderivative() const {
    std::vector<Rational> out(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i + 1));
    }
    return ExactPoly(std::move(out));
}

ExactPoly ExactPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    }
    return ExactPoly(std::move(out));
}

Rational ExactPoly::integrate(const Rational& lo, const Rational& hi) const {
    const ExactPoly anti = antiderivative();
    return anti.evaluate(hi) - anti.evaluate(lo);
}

ExactPoly ExactPoly::reflect() const {
    // sum c_i (1 - a)^i
    const ExactPoly one_minus({Rational(1), Rational(-1)});
    ExactPoly result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * one_minus + constant(*it);
    }
    return result;
}

ExactPoly& ExactPoly::operator+=(const ExactPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator-=(const ExactPoly& rhs) { return *this += -rhs; }

ExactPoly& ExactPoly::operator*=(const ExactPoly& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

ExactPoly& ExactPoly::operator*=(const Rational& scale) {
    for (auto& c : coeffs_) {
        c *= scale;
    }
    trim();
    return *this;
}

ExactPoly ExactPoly::operator-() const {
    ExactPoly out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

std::string ExactPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == Rational(1);
        if (!unit || i == 0) {
            os << mag;
        }
        if (i >= 1) {
            os << "a";
        }
        if (i >= 2) {
            os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ExactPoly pow(const ExactPoly& base, unsigned exponent) {
    ExactPoly result = ExactPoly::constant(1);
    ExactPoly square = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= square;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            square *= square;
        }
    }
    return result;
}

Rational integrate_poly_01(const ExactPoly& poly) {
    Rational sum;
    const auto& coeffs = poly.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        sum += coeffs[i] / Rational(static_cast<long>(i + 1));
    }
    return sum;
}

} // namespace ibayes
