#pragma once

/**
 * @file identities.hpp
 * @brief Exact, finite-range verification of the combinatorial identities and
 *        sign facts behind the J_n construction and its root bracket.
 *
 * Every check is done in rational arithmetic. A failed check is reported, not
 * thrown.
 */

#include "ibayes/triangle.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ibayes {

struct IdentityReport {
    IdentityReport(std::string identity, std::string tested_range)
        : name(std::move(identity)), range(std::move(tested_range)) {}

    std::string name;
    std::string range;
    bool passed = true;
    long cases = 0;
    std::optional<std::string> counterexample;

    void fail(std::string what);
    /// Folds `other` into this report; the first counterexample wins.
    void absorb(const IdentityReport& other);
};

/// sum_r C(x, r) (-1)^r m/(m+r)  versus  1 / C(m+x, x)
std::pair<Rational, Rational> check_gould_141(int m, int x);

/// sum_{k<=x} C(2x+1, k) == 4^x
bool check_gould_183(int x);

/// Coefficient-wise J_n (integer form) == (n+3)!/(x!(n-x)!) (1-a)[I_n(1-a,n-x) - I_n(a,x)].
IdentityReport check_jn_factorization(const BinomialObs& obs);
/// Same check with the left side supplied by the caller.
IdentityReport check_jn_factorization(const JnPolynomial& candidate);

/// H(a) alternating form == positive binomial-convolution form, both > 0, and
/// J_n = 2 a^(x+2) H(a) - (n-x+1)(n+3) a + (n-x+1)(x+1) at every grid point.
IdentityReport check_h_positivity(const BinomialObs& obs, const std::vector<Rational>& grid);

/// Sign of J_n at (x+1)/(n+3), (x+2)/(n+3) and (x+1)/(n+2).
IdentityReport check_endpoint_signs(const BinomialObs& obs);

Rational h_alternating(const Rational& a, const BinomialObs& obs);
Rational h_positive(const Rational& a, const BinomialObs& obs);

/// Nine points k/10, k = 1..9.
std::vector<Rational> default_h_grid();

struct VerifyConfig {
    int n_max_symbolic = 12;
    int n_max_pointwise = 40;
    int gould_m_max = 30;
    int gould_x_max = 30;
    std::vector<Rational> h_grid = default_h_grid();
    /// Harness self-test: perturb the constant coefficient of J_n for this
    /// observation before the factorization check.
    std::optional<BinomialObs> perturb_jn;
};

/// One report per identity over its configured range.
std::vector<IdentityReport> verify_all(const VerifyConfig& config);

} // namespace ibayes
