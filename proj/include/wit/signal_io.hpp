#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wit/error.hpp"
#include "wit/signal.hpp"

namespace wit {

enum class SignalFormat { csv, json };

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline int line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace detail

/// One real per line; '#' starts a comment; blank lines are skipped.
inline std::vector<double> parse_csv_samples(std::string_view text) {
    std::vector<double> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (!line.empty() && line.back() == ',') line = detail::trim(line.substr(0, line.size() - 1));
        if (line.empty()) continue;
        double v = 0.0;
        const auto* first = line.data() + (line.front() == '+' ? 1 : 0);
        const auto [ptr, ec] = std::from_chars(first, line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            throw ParseError("'" + std::string(line) + "' is not a number", line_no);
        if (!std::isfinite(v)) throw ParseError("non-finite sample '" + std::string(line) + "'", line_no);
        out.push_back(v);
    }
    return out;
}

/// A flat JSON array of numbers.
inline std::vector<double> parse_json_samples(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), detail::line_of_offset(text, e.byte));
    }
    if (!doc.is_array()) throw ParseError("expected a flat JSON array of numbers", 1);
    std::vector<double> out;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        if (!doc[i].is_number()) throw ParseError("element " + std::to_string(i) + " is not a number", 0);
        const double v = doc[i].get<double>();
        if (!std::isfinite(v)) throw ParseError("element " + std::to_string(i) + " is not finite", 0);
        out.push_back(v);
    }
    return out;
}

inline SampledSignal parse_signal(std::string_view text, SignalFormat format, std::string name = {}) {
    auto samples = format == SignalFormat::json ? parse_json_samples(text) : parse_csv_samples(text);
    if (samples.empty()) throw ParseError("signal is empty", 0);
    if (samples.size() < 2) throw ParseError("signal needs at least two samples", 0);
    return SampledSignal(std::move(samples), std::move(name));
}

/// Reads a signal file: .json as a flat numeric array, anything else as CSV.
inline SampledSignal ingest_signal(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open signal file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto format = path.extension() == ".json" ? SignalFormat::json : SignalFormat::csv;
    try {
        return parse_signal(buf.str(), format, path.stem().string());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    }
}

}  // namespace wit
