#pragma once

// Formatting helpers shared by the subcommands. Nothing here consults the
// C locale: decimals always use '.'.

#include <string>
#include <string_view>

namespace ibayes::cli {

enum class OutputFormat { Csv, Json, Plain };

OutputFormat parse_format(std::string_view name);

/// Fixed-point text with `digits` decimals.
std::string fixed(double value, int digits);
/// The double nearest to fixed(value, digits); what JSON output carries.
double rounded(double value, int digits);
/// Scientific text used for residuals.
std::string scientific(double value);

/// RFC 4180 quoting when the field contains a comma, quote or line break.
std::string csv_field(std::string_view text);

} // namespace ibayes::cli
