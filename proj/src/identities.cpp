#include "ibayes/identities.hpp"

#include <fmt/format.h>

namespace ibayes {

namespace {

std::string obs_label(const BinomialObs& obs) { return fmt::format("n={}, x={}", obs.n, obs.x); }

template <typename Check>
IdentityReport over_triangle(std::string name, int n_max, Check&& check) {
    IdentityReport total{std::move(name), fmt::format("1 <= n <= {}, 0 <= x <= n", n_max)};
    for (int n = 1; n <= n_max; ++n) {
        for (int x = 0; x <= n; ++x) {
            total.absorb(check(BinomialObs(n, x)));
        }
    }
    return total;
}

} // namespace

void IdentityReport::fail(std::string what) {
    if (passed) {
        counterexample = std::move(what);
    }
    passed = false;
}

void IdentityReport::absorb(const IdentityReport& other) {
    cases += other.cases;
    if (!other.passed) {
        fail(other.counterexample.value_or("(no detail)"));
    }
}

std::pair<Rational, Rational> check_gould_141(int m, int x) {
    if (m < 1 || x < 0) {
        throw std::invalid_argument("check_gould_141: m >= 1 and x >= 0 required");
    }
    Rational lhs;
    for (int r = 0; r <= x; ++r) {
        const Rational term = Rational(binomial(x, r)) * Rational(m, m + r);
        lhs += (r % 2 == 0) ? term : -term;
    }
    return {lhs, Rational(BigInt(1), binomial(m + x, x))};
}

bool check_gould_183(int x) {
    if (x < 0) {
        throw std::invalid_argument("check_gould_183: x must be nonnegative");
    }
    BigInt sum = 0;
    for (int k = 0; k <= x; ++k) {
        sum += binomial(2 * x + 1, k);
    }
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, 2UL * static_cast<unsigned long>(x));
    return sum == power;
}

IdentityReport check_jn_factorization(const BinomialObs& obs) { return check_jn_factorization(build_jn(obs)); }

IdentityReport check_jn_factorization(const JnPolynomial& candidate) {
    IdentityReport report{"jn-factorization", obs_label(candidate.obs)};
    report.cases = 1;
    const ExactPoly expected = jn_from_integrals(candidate.obs);
    if (!candidate.poly.has_integer_coefficients()) {
        report.fail(fmt::format("{}: non-integer coefficient in {}", obs_label(candidate.obs), candidate.poly.to_string()));
    }
    if (!(candidate.poly == expected)) {
        const long deg = std::max(candidate.poly.degree(), expected.degree());
        for (long i = 0; i <= deg; ++i) {
            const auto k = static_cast<std::size_t>(i);
            if (!(candidate.poly.coefficient(k) == expected.coefficient(k))) {
                report.fail(fmt::format("{}: coefficient of a^{} is {}, integral form gives {}",
                                        obs_label(candidate.obs), i, candidate.poly.coefficient(k).to_string(),
                                        expected.coefficient(k).to_string()));
                break;
            }
        }
    }
    return report;
}

Rational h_alternating(const Rational& a, const BinomialObs& obs) {
    const int n = obs.n;
    const int x = obs.x;
    Rational sum;
    Rational a_power(1);
    for (int r = 0; r <= n - x; ++r) {
        const Rational term = Rational(BigInt(binomial(n + 3, n - x - r) * binomial(x + r, r))) * a_power;
        sum += (r % 2 == 0) ? term : -term;
        a_power *= a;
    }
    return sum;
}

Rational h_positive(const Rational& a, const BinomialObs& obs) {
    const int free = obs.n - obs.x;
    const Rational one_minus = Rational(1) - a;
    Rational sum;
    for (int k = 0; k <= free; ++k) {
        sum += Rational(BigInt(binomial(obs.n + 3, k) * binomial(free - k + 2, 2))) * pow(a, static_cast<unsigned>(free - k)) *
               pow(one_minus, static_cast<unsigned>(k));
    }
    return sum;
}

IdentityReport check_h_positivity(const BinomialObs& obs, const std::vector<Rational>& grid) {
    IdentityReport report{"h-positivity", obs_label(obs)};
    const int n = obs.n;
    const int x = obs.x;
    const Rational scale(factorial(n + 3), factorial(x) * factorial(n - x));
    const ExactPoly in_here = in_polynomial(obs);
    const ExactPoly in_mirror = in_polynomial(obs.mirrored());
    const Rational linear(static_cast<long>(n - x + 1) * (n + 3));
    const Rational constant(static_cast<long>(n - x + 1) * (x + 1));

    for (const Rational& a : grid) {
        if (a.sign() <= 0 || a >= Rational(1)) {
            throw std::invalid_argument("check_h_positivity: grid points must lie in (0, 1)");
        }
        ++report.cases;
        const Rational alt = h_alternating(a, obs);
        const Rational pos = h_positive(a, obs);
        const std::string at = fmt::format("{}, a={}", obs_label(obs), a.to_string());
        if (!(alt == pos)) {
            report.fail(fmt::format("{}: alternating H = {} but positive form = {}", at, alt.to_string(),
                                    pos.to_string()));
            continue;
        }
        if (pos.sign() <= 0) {
            report.fail(fmt::format("{}: H = {} is not positive", at, pos.to_string()));
            continue;
        }
        const Rational via_h = Rational(2) * pow(a, static_cast<unsigned>(x + 2)) * pos - linear * a + constant;
        const Rational via_integrals =
            scale * (Rational(1) - a) * (in_mirror.evaluate(Rational(1) - a) - in_here.evaluate(a));
        if (!(via_h == via_integrals)) {
            report.fail(fmt::format("{}: 2a^(x+2)H(a) form = {} but integral form = {}", at, via_h.to_string(),
                                    via_integrals.to_string()));
        }
    }
    return report;
}

IdentityReport check_endpoint_signs(const BinomialObs& obs) {
    IdentityReport report{"endpoint-signs", obs_label(obs)};
    const JnPolynomial jn = build_jn(obs);
    const auto [lo, hi] = iterative_bayes_bracket(obs);
    const Rational uniform(obs.x + 1, obs.n + 2);

    report.cases = 3;
    if (jn(lo).sign() <= 0) {
        report.fail(fmt::format("{}: J_n((x+1)/(n+3)) = {} is not positive", obs_label(obs), jn(lo).to_string()));
    }
    if (jn(hi).sign() >= 0) {
        report.fail(fmt::format("{}: J_n((x+2)/(n+3)) = {} is not negative", obs_label(obs), jn(hi).to_string()));
    }
    const int at_uniform = jn(uniform).sign();
    const int twice_x = 2 * obs.x;
    if (twice_x > obs.n && at_uniform >= 0) {
        report.fail(fmt::format("{}: J_n((x+1)/(n+2)) = {} is not negative for x > n/2", obs_label(obs),
                                jn(uniform).to_string()));
    } else if (twice_x == obs.n && at_uniform != 0) {
        report.fail(fmt::format("{}: J_n((x+1)/(n+2)) = {} is not zero for n = 2x", obs_label(obs),
                                jn(uniform).to_string()));
    } else if (twice_x < obs.n && at_uniform <= 0) {
        report.fail(fmt::format("{}: J_n((x+1)/(n+2)) = {} is not positive for x < n/2", obs_label(obs),
                                jn(uniform).to_string()));
    }
    return report;
}

std::vector<Rational> default_h_grid() {
    std::vector<Rational> grid;
    for (int k = 1; k <= 9; ++k) {
        grid.emplace_back(k, 10);
    }
    return grid;
}

std::vector<IdentityReport> verify_all(const VerifyConfig& config) {
    std::vector<IdentityReport> reports;

    IdentityReport gould141{"gould-alternating-reciprocal",
                            fmt::format("1 <= m <= {}, 0 <= x <= {}", config.gould_m_max, config.gould_x_max)};
    for (int m = 1; m <= config.gould_m_max; ++m) {
        for (int x = 0; x <= config.gould_x_max; ++x) {
            ++gould141.cases;
            auto [lhs, rhs] = check_gould_141(m, x);
            if (!(lhs == rhs)) {
                gould141.fail(fmt::format("m={}, x={}: lhs = {}, rhs = {}", m, x, lhs.to_string(), rhs.to_string()));
            }
        }
    }
    reports.push_back(std::move(gould141));

    IdentityReport gould183{"gould-half-row-sum", fmt::format("0 <= x <= {}", config.gould_x_max)};
    for (int x = 0; x <= config.gould_x_max; ++x) {
        ++gould183.cases;
        if (!check_gould_183(x)) {
            gould183.fail(fmt::format("x={}", x));
        }
    }
    reports.push_back(std::move(gould183));

    reports.push_back(over_triangle("jn-factorization", config.n_max_symbolic, [&](const BinomialObs& obs) {
        JnPolynomial jn = build_jn(obs);
        if (config.perturb_jn && *config.perturb_jn == obs) {
            jn.poly.set_coefficient(0, jn.poly.coefficient(0) + Rational(1));
        }
        return check_jn_factorization(jn);
    }));

    reports.push_back(over_triangle("h-positivity", config.n_max_pointwise,
                                    [&](const BinomialObs& obs) { return check_h_positivity(obs, config.h_grid); }));

    reports.push_back(over_triangle("endpoint-signs", config.n_max_pointwise,
                                    [](const BinomialObs& obs) { return check_endpoint_signs(obs); }));
    return reports;
}

} // namespace ibayes
