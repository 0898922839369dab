#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wit/error.hpp"

namespace wit {

/// Two-channel orthogonal filter bank (h low-pass, g high-pass), taps indexed from 0.
///
/// Taps carry the sqrt2 of the two-scale relation, so sum h^2 = sum g^2 = 1
/// and sum h = sqrt2.
struct OrthogonalFilterPair {
    std::string name;
    std::vector<double> h;
    std::vector<double> g;

    std::size_t length() const { return h.size(); }

    /// Builds g by the quadrature-mirror rule g_k = (-1)^k h_{L-1-k}.
    static OrthogonalFilterPair from_lowpass(std::string name, std::vector<double> h) {
        if (h.empty() || h.size() % 2 != 0)
            throw PreconditionError("filter '" + name + "' must have an even, positive number of taps");
        std::vector<double> g(h.size());
        const std::size_t last = h.size() - 1;
        for (std::size_t k = 0; k < h.size(); ++k) g[k] = (k % 2 == 0 ? 1.0 : -1.0) * h[last - k];
        return {std::move(name), std::move(h), std::move(g)};
    }
};

/// Residuals of each orthogonal-filter invariant.
struct FilterValidation {
    double lowpass_energy = 0;   ///< |sum h^2 - 1|
    double highpass_energy = 0;  ///< |sum g^2 - 1|
    double lowpass_dc = 0;       ///< |sum h - sqrt2|
    double highpass_dc = 0;      ///< |sum g|
    double double_shift = 0;     ///< max_m |sum_k h_k h_{k+2m} - delta_m|
    double quadrature_mirror = 0;  ///< max_k |g_k - (-1)^k h_{L-1-k}|
    bool even_length = false;
    double threshold = 1e-10;

    double worst() const {
        return std::max({lowpass_energy, highpass_energy, lowpass_dc, highpass_dc, double_shift, quadrature_mirror});
    }
    bool passed() const { return even_length && worst() < threshold; }
};

inline FilterValidation validate_filter(const OrthogonalFilterPair& p, double threshold = 1e-10) {
    FilterValidation r;
    r.threshold = threshold;
    const auto& h = p.h;
    const auto& g = p.g;
    r.even_length = !h.empty() && h.size() % 2 == 0 && g.size() == h.size();
    double eh = 0, eg = 0, sh = 0, sg = 0;
    for (double v : h) eh += v * v, sh += v;
    for (double v : g) eg += v * v, sg += v;
    r.lowpass_energy = std::abs(eh - 1.0);
    r.highpass_energy = std::abs(eg - 1.0);
    r.lowpass_dc = std::abs(sh - std::numbers::sqrt2);
    r.highpass_dc = std::abs(sg);
    const std::size_t n = h.size();
    for (std::size_t m = 0; 2 * m < n; ++m) {
        double acc = 0;
        for (std::size_t k = 0; k + 2 * m < n; ++k) acc += h[k] * h[k + 2 * m];
        r.double_shift = std::max(r.double_shift, std::abs(acc - (m == 0 ? 1.0 : 0.0)));
    }
    if (g.size() == n) {
        for (std::size_t k = 0; k < n; ++k) {
            const double mirror = (k % 2 == 0 ? 1.0 : -1.0) * h[n - 1 - k];
            r.quadrature_mirror = std::max(r.quadrature_mirror, std::abs(g[k] - mirror));
        }
    } else {
        r.quadrature_mirror = 1.0;
    }
    return r;
}

/// Parses a filter file: one low-pass tap per line, '#' starts a comment.
inline OrthogonalFilterPair parse_filter_text(std::string name, std::string_view text) {
    std::vector<double> taps;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        double v = 0;
        const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc() || ptr != line.data() + line.size() || !std::isfinite(v))
            throw ParseError("filter '" + name + "': not a finite number: '" + std::string(line) + "'", line_no);
        taps.push_back(v);
    }
    if (taps.empty()) throw ParseError("filter '" + name + "' has no taps", 0);
    return OrthogonalFilterPair::from_lowpass(std::move(name), std::move(taps));
}

/// Loads a filter file from disk; the filter is named after the file stem.
inline OrthogonalFilterPair load_filter_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open filter file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    auto slash = path.find_last_of("/\\");
    std::string stem = path.substr(slash == std::string::npos ? 0 : slash + 1);
    if (auto dot = stem.rfind('.'); dot != std::string::npos) stem.resize(dot);
    return parse_filter_text(stem, buf.str());
}

}  // namespace wit
