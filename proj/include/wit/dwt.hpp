#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wit/error.hpp"
#include "wit/filter_bank.hpp"
#include "wit/signal.hpp"

namespace wit {

/// Approximation v_J plus details w_1..w_J of a J-level decomposition.
/// details[j - 1] holds level j (length N / 2^j).
struct CoefficientPyramid {
    std::string filter;
    int levels = 0;
    std::vector<double> approx;
    std::vector<std::vector<double>> details;
    std::vector<std::string> warnings;

    std::size_t signal_length() const { return approx.size() << levels; }

    double energy() const {
        double e = 0.0;
        for (double v : approx) e += v * v;
        for (const auto& d : details)
            for (double v : d) e += v * v;
        return e;
    }
};

namespace detail {

inline void analysis_step(const std::vector<double>& x, const OrthogonalFilterPair& p, std::vector<double>& a,
                          std::vector<double>& d) {
    const std::size_t n = x.size();
    const std::size_t half = n / 2;
    a.assign(half, 0.0);
    d.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        double sa = 0.0;
        double sd = 0.0;
        for (std::size_t l = 0; l < p.length(); ++l) {
            const double v = x[(2 * k + l) % n];
            sa += p.h[l] * v;
            sd += p.g[l] * v;
        }
        a[k] = sa;
        d[k] = sd;
    }
}

}  // namespace detail

/// Periodized Mallat pyramid: a[k] = sum_l h_l x[(2k + l) mod n], likewise d with g.
///
/// Levels whose input is shorter than the filter still work (the filter wraps
/// around the period) but are flagged in `warnings`.
inline CoefficientPyramid dwt_periodized(const SampledSignal& f, const OrthogonalFilterPair& p, int levels) {
    if (levels < 1) throw PreconditionError("levels must be >= 1");
    if (levels >= 63 || f.size() % (std::size_t{1} << levels) != 0)
        throw PreconditionError("signal length " + std::to_string(f.size()) + " is not divisible by 2^" +
                                std::to_string(levels));
    CoefficientPyramid out;
    out.filter = p.name;
    out.levels = levels;
    std::vector<double> x = f.samples();
    std::vector<double> a;
    std::vector<double> d;
    for (int j = 1; j <= levels; ++j) {
        if (x.size() < p.length())
            out.warnings.push_back("level " + std::to_string(j) + ": input length " + std::to_string(x.size()) +
                                   " is shorter than the " + std::to_string(p.length()) + "-tap filter");
        detail::analysis_step(x, p, a, d);
        out.details.push_back(d);
        x = a;
    }
    out.approx = std::move(x);
    return out;
}

/// Inverse of dwt_periodized (the transpose of the orthogonal analysis).
inline SampledSignal idwt_periodized(const CoefficientPyramid& c, const OrthogonalFilterPair& p) {
    if (c.levels < 1 || c.details.size() != static_cast<std::size_t>(c.levels))
        throw PreconditionError("pyramid has " + std::to_string(c.details.size()) + " detail levels, expected " +
                                std::to_string(c.levels));
    std::vector<double> a = c.approx;
    for (int j = c.levels; j >= 1; --j) {
        const auto& d = c.details[static_cast<std::size_t>(j - 1)];
        if (d.size() != a.size())
            throw PreconditionError("detail level " + std::to_string(j) + " has " + std::to_string(d.size()) +
                                    " coefficients, expected " + std::to_string(a.size()));
        const std::size_t n = 2 * a.size();
        std::vector<double> x(n, 0.0);
        for (std::size_t k = 0; k < a.size(); ++k)
            for (std::size_t l = 0; l < p.length(); ++l) x[(2 * k + l) % n] += p.h[l] * a[k] + p.g[l] * d[k];
        a = std::move(x);
    }
    return SampledSignal(std::move(a));
}

}  // namespace wit
