#include "ibayes/triangle.hpp"

#include <cmath>

namespace ibayes {

namespace {

const ExactPoly& one_minus_a() {
    static const ExactPoly p({Rational(1), Rational(-1)});
    return p;
}

// p^k (1-p)^j
ExactPoly beta_kernel(int k, int j) {
    return ExactPoly::monomial(static_cast<std::size_t>(k)) * pow(one_minus_a(), static_cast<unsigned>(j));
}

Estimate to_estimate(const RootBracket& rb, const ExactPoly& poly) {
    Estimate e;
    e.value = rb.root.to_double();
    e.method = Method::Bisection;
    e.iterations = rb.iterations;
    e.residual = abs(poly.evaluate(rb.root)).to_double();
    // Conversion truncates toward zero and everything here is positive, so one
    // step outward on each side keeps the exact bracket strictly inside.
    e.bracket = Bracket{std::nextafter(rb.lo.to_double(), 0.0), std::nextafter(rb.hi.to_double(), 2.0)};
    return e;
}

void require_open_unit(const Rational& v, const char* what) {
    if (v.sign() <= 0 || v >= Rational(1)) {
        throw std::invalid_argument(std::string(what) + " must lie strictly in (0, 1)");
    }
}

} // namespace

Extended GoldenConstants::phi_extended() { return (Extended(1) + boost::multiprecision::sqrt(Extended(5))) / 2; }

Extended GoldenConstants::inv_phi_extended() {
    return (boost::multiprecision::sqrt(Extended(5)) - Extended(1)) / 2;
}

double triangle_density(const TrianglePrior& prior, double p) { return prior.density(p); }

Rational triangle_posterior_mean_n1(const Rational& mode) {
    require_open_unit(mode, "mode");
    return (Rational(1) + mode + mode * mode) / (Rational(2) * (Rational(1) + mode));
}

double triangle_posterior_mean_n1(double mode) {
    return triangle_posterior_mean_n1(Rational::from_double(mode)).to_double();
}

TrianglePosterior::TrianglePosterior(const BinomialObs& obs)
    : obs_(obs),
      num_left_(beta_kernel(obs.x + 2, obs.n - obs.x).antiderivative()),
      num_right_(beta_kernel(obs.x + 1, obs.n - obs.x + 1).antiderivative()),
      den_left_(beta_kernel(obs.x + 1, obs.n - obs.x).antiderivative()),
      den_right_(beta_kernel(obs.x, obs.n - obs.x + 1).antiderivative()) {}

Rational TrianglePosterior::mean(const Rational& mode) const {
    require_open_unit(mode, "mode");
    const Rational one(1);
    const Rational left_weight = Rational(2) / mode;
    const Rational right_weight = Rational(2) / (one - mode);
    // antiderivatives vanish at 0
    const Rational num = left_weight * num_left_.evaluate(mode) +
                         right_weight * (num_right_.evaluate(one) - num_right_.evaluate(mode));
    const Rational den = left_weight * den_left_.evaluate(mode) +
                         right_weight * (den_right_.evaluate(one) - den_right_.evaluate(mode));
    return num / den;
}

double TrianglePosterior::mean(double mode) const { return mean(Rational::from_double(mode)).to_double(); }

Rational triangle_posterior_mean(const Rational& mode, const BinomialObs& obs) {
    return TrianglePosterior(obs).mean(mode);
}

double triangle_posterior_mean(double mode, const BinomialObs& obs) { return TrianglePosterior(obs).mean(mode); }

ExactPoly in_polynomial(const BinomialObs& obs) {
    const int free = obs.n - obs.x;
    std::vector<Rational> coeffs(static_cast<std::size_t>(obs.n + 3));
    for (int r = 0; r <= free; ++r) {
        const Rational term = Rational(binomial(free, r)) /
                              Rational(static_cast<long>(obs.x + r + 2) * (obs.x + r + 3));
        coeffs[static_cast<std::size_t>(obs.x + 2 + r)] = (r % 2 == 0) ? term : -term;
    }
    return ExactPoly(std::move(coeffs));
}

Rational in_value(const Rational& a, const BinomialObs& obs) {
    if (a.sign() < 0 || a > Rational(1)) {
        throw std::invalid_argument("in_value: a must lie in [0, 1]");
    }
    return in_polynomial(obs).evaluate(a);
}

double in_value(double a, const BinomialObs& obs) { return in_value(Rational::from_double(a), obs).to_double(); }

JnPolynomial build_jn(const BinomialObs& obs) {
    const int n = obs.n;
    const int x = obs.x;
    std::vector<Rational> coeffs(static_cast<std::size_t>(n + 3));
    for (int r = 0; r <= n - x; ++r) {
        BigInt c = 2 * binomial(n + 3, n - x - r) * binomial(x + r, r);
        if (r % 2 != 0) {
            c = -c;
        }
        coeffs[static_cast<std::size_t>(x + 2 + r)] += Rational(c);
    }
    const long tail = n - x + 1;
    coeffs[1] += Rational(-tail * (n + 3));
    coeffs[0] += Rational(tail * (x + 1));
    return JnPolynomial{obs, ExactPoly(std::move(coeffs))};
}

ExactPoly jn_from_integrals(const BinomialObs& obs) {
    const Rational scale(factorial(obs.n + 3), factorial(obs.x) * factorial(obs.n - obs.x));
    const ExactPoly mirrored = in_polynomial(obs.mirrored()).reflect();
    return scale * (one_minus_a() * (mirrored - in_polynomial(obs)));
}

std::pair<Rational, Rational> iterative_bayes_bracket(const BinomialObs& obs) {
    return {Rational(obs.x + 1, obs.n + 3), Rational(obs.x + 2, obs.n + 3)};
}

RootBracket bisect_root(const ExactPoly& poly, Rational lo, Rational hi, const Rational& width) {
    if (width.sign() <= 0) {
        throw std::invalid_argument("bisect_root: width must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("bisect_root: requires lo < hi");
    }
    const int sign_lo = poly.sign_at(lo);
    const int sign_hi = poly.sign_at(hi);
    if (sign_lo == 0 || sign_hi == 0 || sign_lo == sign_hi) {
        throw BracketFailure("no strict sign change over [" + lo.to_string() + ", " + hi.to_string() + "] for " +
                             poly.to_string());
    }

    RootBracket out;
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / Rational(2);
        ++out.iterations;
        const int s = poly.sign_at(mid);
        if (s == 0) {
            out.root = std::move(mid);
            out.exact = true;
            break;
        }
        (s == sign_lo ? lo : hi) = std::move(mid);
    }
    if (!out.exact) {
        out.root = (lo + hi) / Rational(2);
    }
    out.lo = std::move(lo);
    out.hi = std::move(hi);
    return out;
}

Estimate solve_iterative_bayes(const BinomialObs& obs, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("solve_iterative_bayes: tol must be positive");
    }
    const JnPolynomial jn = build_jn(obs);
    auto [lo, hi] = iterative_bayes_bracket(obs);
    return to_estimate(bisect_root(jn.poly, lo, hi, Rational::from_double(tol)), jn.poly);
}

Extended solve_iterative_bayes_extended(const BinomialObs& obs, int digits) {
    if (digits < 1 || digits > 48) {
        throw std::invalid_argument("solve_iterative_bayes_extended: digits must be in [1, 48]");
    }
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const JnPolynomial jn = build_jn(obs);
    auto [lo, hi] = iterative_bayes_bracket(obs);
    return bisect_root(jn.poly, lo, hi, Rational(BigInt(1), scale)).root.to_extended();
}

Estimate fixed_point_iterate(const BinomialObs& obs, double mode0, double tol, long max_iter, double damping) {
    if (!(mode0 > 0.0 && mode0 < 1.0)) {
        throw std::invalid_argument("fixed_point_iterate: mode0 must lie strictly in (0, 1)");
    }
    if (!(tol > 0.0) || max_iter < 1) {
        throw std::invalid_argument("fixed_point_iterate: tol > 0 and max_iter >= 1 required");
    }
    if (!(damping > 0.0 && damping <= 1.0)) {
        throw std::invalid_argument("fixed_point_iterate: damping must lie in (0, 1]");
    }
    const TrianglePosterior posterior(obs);
    double mode = mode0;
    double delta = 0.0;
    for (long m = 1; m <= max_iter; ++m) {
        const double next = (1.0 - damping) * mode + damping * posterior.mean(mode);
        delta = std::abs(next - mode);
        mode = next;
        if (delta < tol) {
            return Estimate{mode, Method::FixedPoint, m, delta, std::nullopt};
        }
    }
    throw NoConvergence(mode, delta, max_iter);
}

ExactPoly geometric_polynomial(int x) {
    if (x < 0) {
        throw std::invalid_argument("geometric_polynomial: x must be nonnegative");
    }
    const auto k = static_cast<std::size_t>(x);
    ExactPoly p;
    p += ExactPoly::monomial(k + 3, Rational(x + 1));
    p += ExactPoly::monomial(k + 2, Rational(-(x + 4)));
    p += ExactPoly::monomial(1, Rational(x + 4));
    p += ExactPoly::constant(Rational(-(x + 1)));
    return p;
}

Estimate geometric_estimate(int x, double tol) {
    if (x < 0) {
        throw std::invalid_argument("geometric_estimate: x must be nonnegative");
    }
    if (x == 0) {
        return negative_binomial_estimate(1, 0, tol);
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("geometric_estimate: tol must be positive");
    }
    const ExactPoly poly = geometric_polynomial(x);
    return to_estimate(
        bisect_root(poly, Rational(x + 1, x + 4), Rational(x + 2, x + 4), Rational::from_double(tol)), poly);
}

Estimate negative_binomial_estimate(int r, int x, double tol) {
    if (r < 1 || x < 0) {
        throw std::invalid_argument("negative_binomial_estimate: r >= 1 and x >= 0 required");
    }
    return solve_iterative_bayes(BinomialObs(x + r, x), tol);
}

} // namespace ibayes
