#include "commands.hpp"

#include "ibayes/conjugate.hpp"
#include "ibayes/identities.hpp"
#include "ibayes/risk.hpp"
#include "ibayes/triangle.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <ostream>

namespace ibayes::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Maps library and usage exceptions onto the documented exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const EstimationError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailure;
    }
}

void check_digits(int digits, int max_digits) {
    if (digits < 0 || digits > max_digits) {
        throw UsageError(fmt::format("--digits must lie in [0, {}]", max_digits));
    }
}

struct EstimateRow {
    std::optional<int> n;
    int x;
    Estimate estimate;
    std::optional<Extended> extended;
};

void print_estimate(const EstimateRow& row, OutputFormat format, int digits, std::ostream& out) {
    const Estimate& e = row.estimate;
    const std::string value = row.extended ? row.extended->str(digits, std::ios_base::fixed) : fixed(e.value, digits);
    switch (format) {
    case OutputFormat::Plain:
        if (row.n) {
            out << "n          " << *row.n << '\n';
        }
        out << "x          " << row.x << '\n';
        out << "value      " << value << '\n';
        out << "method     " << to_string(e.method) << '\n';
        out << "iterations " << e.iterations << '\n';
        out << "residual   " << scientific(e.residual) << '\n';
        if (e.bracket) {
            const int bd = std::min(digits, 15);
            out << "bracket    [" << fixed(e.bracket->lo, bd) << ", " << fixed(e.bracket->hi, bd) << "]\n";
        }
        break;
    case OutputFormat::Csv:
        out << "n,x,value,method,iterations,residual,bracket_lo,bracket_hi\n";
        out << (row.n ? std::to_string(*row.n) : std::string()) << ',' << row.x << ',' << value << ','
            << to_string(e.method) << ',' << e.iterations << ',' << scientific(e.residual) << ','
            << (e.bracket ? fixed(e.bracket->lo, std::min(digits, 15)) : std::string()) << ','
            << (e.bracket ? fixed(e.bracket->hi, std::min(digits, 15)) : std::string()) << '\n';
        break;
    case OutputFormat::Json: {
        Json j;
        j["n"] = row.n ? Json(*row.n) : Json(nullptr);
        j["x"] = row.x;
        j["value"] = rounded(e.value, std::min(digits, 15));
        j["method"] = std::string(to_string(e.method));
        j["iterations"] = e.iterations;
        j["residual"] = e.residual;
        j["bracket"] = e.bracket ? Json::array({rounded(e.bracket->lo, std::min(digits, 15)),
                                                rounded(e.bracket->hi, std::min(digits, 15))})
                                 : Json(nullptr);
        out << j.dump() << '\n';
        break;
    }
    }
}

} // namespace

int cmd_estimate(const EstimateOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_digits(opts.digits, opts.extended ? 40 : 15);
        if (!opts.x) {
            throw UsageError("--x is required");
        }
        EstimateRow row{opts.n, *opts.x, {}, std::nullopt};
        std::optional<BinomialObs> equivalent;

        if (opts.geometric) {
            if (opts.n || opts.r) {
                throw UsageError("--geometric cannot be combined with --n or --r");
            }
            row.estimate = geometric_estimate(*opts.x, opts.tol);
            equivalent = BinomialObs(*opts.x + 1, *opts.x);
        } else if (opts.r) {
            if (opts.n) {
                throw UsageError("--r cannot be combined with --n");
            }
            row.estimate = negative_binomial_estimate(*opts.r, *opts.x, opts.tol);
            equivalent = BinomialObs(*opts.x + *opts.r, *opts.x);
        } else {
            if (!opts.n) {
                throw UsageError("--n is required");
            }
            const BinomialObs obs(*opts.n, *opts.x);
            if (opts.model == "triangle") {
                row.estimate = solve_iterative_bayes(obs, opts.tol);
                equivalent = obs;
            } else if (opts.model == "characteristic") {
                const Characteristic ch(Rational::parse(opts.a), Rational::parse(opts.b));
                row.estimate = Estimate{theorem1_limit(ch, obs).to_double(), Method::ClosedForm, 0, 0.0, std::nullopt};
            } else {
                throw UsageError("unknown model '" + opts.model + "'");
            }
        }
        if (opts.extended) {
            if (!equivalent) {
                throw UsageError("--extended applies to the triangle-prior estimators only");
            }
            row.extended = solve_iterative_bayes_extended(*equivalent, 45);
        }
        print_estimate(row, opts.format, opts.digits, out);
        return static_cast<int>(kSuccess);
    });
}

int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_digits(opts.digits, 15);
        const int width = opts.digits + 3;
        if (opts.which == "table2") {
            if (opts.n_max < 1) {
                throw UsageError("--n-max must be >= 1");
            }
            std::vector<std::vector<double>> rows;
            for (int n = 1; n <= opts.n_max; ++n) {
                std::vector<double> row;
                for (int x = 0; x <= n; ++x) {
                    row.push_back(solve_iterative_bayes(BinomialObs(n, x)).value);
                }
                rows.push_back(std::move(row));
            }
            switch (opts.format) {
            case OutputFormat::Plain:
                out << fmt::format("{:>4}", "n\\x");
                for (int x = 0; x <= opts.n_max; ++x) {
                    out << fmt::format(" {:>{}}", x, width);
                }
                out << '\n';
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    out << fmt::format("{:>4}", i + 1);
                    for (double v : rows[i]) {
                        out << fmt::format(" {:>{}}", fixed(v, opts.digits), width);
                    }
                    out << '\n';
                }
                break;
            case OutputFormat::Csv:
                out << "n,x,value\n";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    for (std::size_t x = 0; x < rows[i].size(); ++x) {
                        out << i + 1 << ',' << x << ',' << fixed(rows[i][x], opts.digits) << '\n';
                    }
                }
                break;
            case OutputFormat::Json: {
                Json entries = Json::array();
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    for (std::size_t x = 0; x < rows[i].size(); ++x) {
                        entries.push_back({{"n", i + 1}, {"x", x}, {"value", rounded(rows[i][x], opts.digits)}});
                    }
                }
                out << Json{{"table", "table2"}, {"entries", entries}}.dump() << '\n';
                break;
            }
            }
            return static_cast<int>(kSuccess);
        }
        if (opts.which == "table3") {
            if (opts.x_max < 0) {
                throw UsageError("--x-max must be >= 0");
            }
            std::vector<double> row;
            for (int x = 0; x <= opts.x_max; ++x) {
                row.push_back(geometric_estimate(x).value);
            }
            switch (opts.format) {
            case OutputFormat::Plain:
                out << fmt::format("{:>4}", "x");
                for (int x = 0; x <= opts.x_max; ++x) {
                    out << fmt::format(" {:>{}}", x, width);
                }
                out << '\n' << fmt::format("{:>4}", "p");
                for (double v : row) {
                    out << fmt::format(" {:>{}}", fixed(v, opts.digits), width);
                }
                out << '\n';
                break;
            case OutputFormat::Csv:
                out << "x,value\n";
                for (std::size_t x = 0; x < row.size(); ++x) {
                    out << x << ',' << fixed(row[x], opts.digits) << '\n';
                }
                break;
            case OutputFormat::Json: {
                Json entries = Json::array();
                for (std::size_t x = 0; x < row.size(); ++x) {
                    entries.push_back({{"x", x}, {"value", rounded(row[x], opts.digits)}});
                }
                out << Json{{"table", "table3"}, {"entries", entries}}.dump() << '\n';
                break;
            }
            }
            return static_cast<int>(kSuccess);
        }
        throw UsageError("unknown table '" + opts.which + "' (expected table2 or table3)");
    });
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opts.n_max_symbolic < 1 || opts.n_max_pointwise < 1 || opts.gould_max < 1) {
            throw UsageError("verification ranges must be >= 1");
        }
        VerifyConfig config;
        config.n_max_symbolic = opts.n_max_symbolic;
        config.n_max_pointwise = opts.n_max_pointwise;
        config.gould_m_max = opts.gould_max;
        config.gould_x_max = opts.gould_max;
        if (opts.self_test) {
            config.perturb_jn = opts.n_max_symbolic >= 2 ? BinomialObs(2, 1) : BinomialObs(1, 1);
        }
        const auto reports = verify_all(config);
        const bool all_passed =
            std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.passed; });

        switch (opts.format) {
        case OutputFormat::Plain:
            for (const auto& r : reports) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.range << "] " << r.cases << " cases";
                if (r.counterexample) {
                    out << ": " << *r.counterexample;
                }
                out << '\n';
            }
            break;
        case OutputFormat::Csv:
            out << "identity,range,passed,cases,counterexample\n";
            for (const auto& r : reports) {
                out << csv_field(r.name) << ',' << csv_field(r.range) << ',' << (r.passed ? "true" : "false") << ','
                    << r.cases << ',' << csv_field(r.counterexample.value_or("")) << '\n';
            }
            break;
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& r : reports) {
                arr.push_back({{"identity", r.name},
                               {"range", r.range},
                               {"passed", r.passed},
                               {"cases", r.cases},
                               {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}});
            }
            out << arr.dump() << '\n';
            break;
        }
        }
        if (!all_passed) {
            err << "verification failed\n";
        }
        return static_cast<int>(all_passed ? kSuccess : kVerificationFailure);
    });
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_digits(opts.digits, 15);
        if (opts.n < 1) {
            throw UsageError("--n must be >= 1");
        }
        if (opts.grid < 2) {
            throw UsageError("--grid must be >= 2");
        }
        if (opts.monte_carlo && !opts.seed) {
            throw UsageError("--monte-carlo requires an explicit --seed");
        }
        const RiskTable table = compare(opts.n, opts.grid);

        std::vector<std::string> headers{"p"};
        for (const auto& col : table.columns) {
            headers.emplace_back(to_string(col.tag));
        }
        std::vector<std::vector<double>> rows(table.p_grid.size());
        for (std::size_t i = 0; i < table.p_grid.size(); ++i) {
            rows[i].push_back(table.p_grid[i]);
            for (const auto& col : table.columns) {
                rows[i].push_back(col.mse[i]);
            }
        }
        if (opts.monte_carlo) {
            const auto estimators = standard_estimators();
            for (const auto& est : estimators) {
                headers.push_back(fmt::format("{}_mc", to_string(est.tag)));
                headers.push_back(fmt::format("{}_mc_se", to_string(est.tag)));
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                for (std::size_t k = 0; k < estimators.size(); ++k) {
                    const std::uint64_t stream = *opts.seed + 0x9E3779B97F4A7C15ULL * (i * estimators.size() + k + 1);
                    const auto mc = monte_carlo_risk(estimators[k], opts.n, table.p_grid[i], *opts.monte_carlo, stream);
                    rows[i].push_back(mc.mse);
                    rows[i].push_back(mc.std_error);
                }
            }
        }

        switch (opts.format) {
        case OutputFormat::Csv:
        case OutputFormat::Plain: {
            const char sep = opts.format == OutputFormat::Csv ? ',' : ' ';
            for (std::size_t k = 0; k < headers.size(); ++k) {
                out << (k ? std::string(1, sep) : std::string()) << headers[k];
            }
            out << '\n';
            for (const auto& row : rows) {
                for (std::size_t k = 0; k < row.size(); ++k) {
                    out << (k ? std::string(1, sep) : std::string()) << fixed(row[k], opts.digits);
                }
                out << '\n';
            }
            break;
        }
        case OutputFormat::Json: {
            Json arr = Json::array();
            for (const auto& row : rows) {
                Json obj = Json::object();
                for (std::size_t k = 0; k < row.size(); ++k) {
                    obj[headers[k]] = rounded(row[k], opts.digits);
                }
                arr.push_back(std::move(obj));
            }
            out << Json{{"n", opts.n}, {"rows", arr}}.dump() << '\n';
            break;
        }
        }
        return static_cast<int>(kSuccess);
    });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Iterative Bayes estimates of a success probability from very small samples"};
    app.name(args.empty() ? "ibayes" : args.front());
    app.require_subcommand(1);

    const std::vector<std::string> formats{"csv", "json", "plain"};

    EstimateOptions est;
    std::string est_format = "plain";
    auto* estimate = app.add_subcommand("estimate", "Estimate p from one observation");
    estimate->add_option("--n", est.n, "Number of binomial trials");
    estimate->add_option("--x", est.x, "Observed successes");
    estimate->add_option("--r", est.r, "Negative-binomial failure count (x successes before the r-th failure)");
    estimate->add_flag("--geometric", est.geometric, "Geometric model: x successes before the first failure");
    estimate->add_option("--model", est.model, "triangle (iterative Bayes) or characteristic ((x+a)/(n+b))")
        ->check(CLI::IsMember({"triangle", "characteristic"}));
    estimate->add_option("--a", est.a, "Characteristic offset a (exact, e.g. 1/2)");
    estimate->add_option("--b", est.b, "Characteristic offset b (exact)");
    estimate->add_option("--tol", est.tol, "Final bracket width")->check(CLI::PositiveNumber);
    estimate->add_flag("--extended", est.extended, "Refine the root to 45 digits before printing");
    estimate->add_option("--format", est_format, "csv, json or plain")->check(CLI::IsMember(formats));
    estimate->add_option("--digits", est.digits, "Decimals in output (<= 15, <= 40 with --extended)");

    TableOptions tab;
    std::string tab_format = "plain";
    auto* table = app.add_subcommand("table", "Reproduce the binomial (table2) or geometric (table3) table");
    table->add_option("which", tab.which, "table2 or table3")->check(CLI::IsMember({"table2", "table3"}));
    table->add_option("--n-max", tab.n_max, "Largest n for table2");
    table->add_option("--x-max", tab.x_max, "Largest x for table3");
    table->add_option("--format", tab_format, "csv, json or plain")->check(CLI::IsMember(formats));
    table->add_option("--digits", tab.digits, "Decimals in output (<= 15)");

    VerifyOptions ver;
    std::string ver_format = "plain";
    auto* verify = app.add_subcommand("verify", "Run the exact identity checks");
    verify->add_option("--n-max-symbolic", ver.n_max_symbolic, "Largest n for coefficient-wise checks");
    verify->add_option("--n-max-pointwise", ver.n_max_pointwise, "Largest n for pointwise checks");
    verify->add_option("--gould-max", ver.gould_max, "Largest m and x for the binomial-sum identities");
    verify->add_flag("--self-test", ver.self_test, "Perturb one J_n coefficient; the run must then fail");
    verify->add_option("--format", ver_format, "csv, json or plain")->check(CLI::IsMember(formats));

    CompareOptions cmp;
    std::string cmp_format = "csv";
    auto* comparison = app.add_subcommand("compare", "Exact quadratic risk of four estimators over a p grid");
    comparison->add_option("--n", cmp.n, "Number of trials");
    comparison->add_option("--grid", cmp.grid, "Number of evenly spaced p values, endpoints included");
    comparison->add_option("--monte-carlo", cmp.monte_carlo, "Also estimate risk from this many simulated draws");
    comparison->add_option("--seed", cmp.seed, "Seed for --monte-carlo");
    comparison->add_option("--format", cmp_format, "csv, json or plain")->check(CLI::IsMember(formats));
    comparison->add_option("--digits", cmp.digits, "Decimals in output (<= 15)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) {
        argv.push_back("ibayes");
    }
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (*estimate) {
        est.format = parse_format(est_format);
        return cmd_estimate(est, out, err);
    }
    if (*table) {
        tab.format = parse_format(tab_format);
        return cmd_table(tab, out, err);
    }
    if (*verify) {
        ver.format = parse_format(ver_format);
        return cmd_verify(ver, out, err);
    }
    cmp.format = parse_format(cmp_format);
    return cmd_compare(cmp, out, err);
}

} // namespace ibayes::cli
