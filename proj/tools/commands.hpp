#pragma once

#include "output.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ibayes::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

struct EstimateOptions {
    std::optional<int> n;
    std::optional<int> x;
    std::optional<int> r;  ///< negative-binomial stopping count
    bool geometric = false;
    std::string model = "triangle"; ///< triangle | characteristic
    std::string a = "1";            ///< characteristic offsets, exact rationals
    std::string b = "2";
    double tol = 1e-15;
    bool extended = false;
    OutputFormat format = OutputFormat::Plain;
    int digits = 6;
};

struct TableOptions {
    std::string which = "table2";
    int n_max = 10;
    int x_max = 9;
    OutputFormat format = OutputFormat::Plain;
    int digits = 6;
};

struct VerifyOptions {
    int n_max_symbolic = 12;
    int n_max_pointwise = 40;
    int gould_max = 30;
    bool self_test = false;
    OutputFormat format = OutputFormat::Plain;
};

struct CompareOptions {
    int n = 1;
    int grid = 101;
    std::optional<long> monte_carlo;
    std::optional<std::uint64_t> seed;
    OutputFormat format = OutputFormat::Csv;
    int digits = 6;
};

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err);
int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ibayes::cli
