#include "output.hpp"

#include <fmt/format.h>

#include <charconv>
#include <stdexcept>

namespace ibayes::cli {

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "plain") {
        return OutputFormat::Plain;
    }
    throw std::invalid_argument(fmt::format("unknown format '{}'", name));
}

std::string fixed(double value, int digits) { return fmt::format("{:.{}f}", value, digits); }

double rounded(double value, int digits) {
    const std::string text = fixed(value, digits);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc()) {
        throw std::runtime_error("rounded: cannot re-read " + text);
    }
    return out;
}

std::string scientific(double value) { return fmt::format("{:.3e}", value); }

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

} // namespace ibayes::cli
