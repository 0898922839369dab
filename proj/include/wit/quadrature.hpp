#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wit/error.hpp"

namespace wit {

enum class QuadratureRule { midpoint, adaptive_midpoint };

/// Controls for every integral over (-inf, inf) the library approximates.
///
/// Integrals are truncated to a window (derived from the wavelet's
/// effective support unless a half-width override is given) and evaluated
/// with composite midpoint panels. With the adaptive rule the panel count
/// is doubled, with Romberg extrapolation, until two successive estimates
/// differ by less than `tolerance`.
struct QuadratureConfig {
    std::optional<double> time_half_width;
    std::optional<double> frequency_half_width;
    int points = 256;
    QuadratureRule rule = QuadratureRule::adaptive_midpoint;
    double tolerance = 1e-8;
    int max_doublings = 10;
    /// Energy fraction that defines the truncation window for Gaussian-decay domains.
    double window_fraction = 1.0 - 1e-8;

    void validate() const {
        if (points < 64) throw PreconditionError("quadrature points must be >= 64, got " + std::to_string(points));
        if (!(tolerance > 0.0)) throw PreconditionError("quadrature tolerance must be > 0");
        if (max_doublings < 0) throw PreconditionError("max_doublings must be >= 0");
        if (!(window_fraction > 0.0 && window_fraction < 1.0))
            throw PreconditionError("window_fraction must lie in (0, 1)");
    }
};

template <class T>
struct Integral {
    T value{};
    double error = 0.0;
};

namespace detail {

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) { return std::abs(v); }
inline bool is_infinite(double v) { return std::isinf(v); }
inline bool is_infinite(std::complex<double> v) { return std::isinf(v.real()) || std::isinf(v.imag()); }

/// Composite midpoint sum of f over [lo, hi] with n panels.
template <class T, class F>
T midpoint_sum(F& f, double lo, double hi, std::size_t n) {
    const double h = (hi - lo) / static_cast<double>(n);
    T acc{};
    // Pairwise-ish accumulation in blocks keeps roundoff flat for large n.
    T block{};
    for (std::size_t i = 0; i < n; ++i) {
        block += f(lo + (static_cast<double>(i) + 0.5) * h);
        if ((i & 1023u) == 1023u) {
            acc += block;
            block = T{};
        }
    }
    acc += block;
    return acc * h;
}

}  // namespace detail

/// Sorted, de-duplicated breakpoints clipped to [lo, hi], endpoints included.
inline std::vector<double> make_segments(double lo, double hi, std::span<const double> interior = {}) {
    std::vector<double> pts{lo, hi};
    for (double b : interior)
        if (b > lo && b < hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

enum class Convergence { required, best_effort };

/// Integrates f over consecutive segments [breaks[i], breaks[i+1]].
///
/// `resolution` is the length scale the integrand varies on. cfg.points
/// panels are spread over the whole range by length, and each segment gets
/// at least 16 panels per resolution length (and never fewer than 8). An infinite
/// sample short-circuits to an infinite result. In best-effort mode a
/// segment that does not converge contributes its finest value and its
/// last change as the error instead of throwing.
template <class T, class F>
Integral<T> integrate(F&& f, std::span<const double> breaks, double resolution, const QuadratureConfig& cfg,
                      Convergence mode = Convergence::required) {
    cfg.validate();
    if (breaks.size() < 2) throw PreconditionError("integrate: need at least two breakpoints");
    Integral<T> total;
    for (std::size_t s = 0; s + 1 < breaks.size(); ++s) {
        const double lo = breaks[s];
        const double hi = breaks[s + 1];
        if (!(hi > lo)) continue;
        const double span_share = (hi - lo) / (breaks.back() - breaks.front());
        double want = std::max(8.0, std::ceil(cfg.points * span_share));
        if (resolution > 0.0) want = std::max(want, std::ceil(16.0 * (hi - lo) / resolution));
        std::size_t n = static_cast<std::size_t>(std::min(want, 4.0e7));
        // Tolerance share: by length, but never below an equal split, so short
        // segments inside long windows are not held to a vanishing target.
        const double seg_tol =
            cfg.tolerance * std::max(span_share, 1.0 / static_cast<double>(breaks.size() - 1));
        T coarse = detail::midpoint_sum<T>(f, lo, hi, n);
        if (detail::is_infinite(coarse)) return {coarse, 0.0};
        if (cfg.rule == QuadratureRule::midpoint) {
            total.value += coarse;
            continue;
        }
        // Romberg table over the halving sequence; the midpoint error has an
        // even-power expansion, so each column removes the next h^{2m} term.
        // Kinks break that expansion, so the raw midpoint column may converge first.
        constexpr std::size_t max_order = 4;
        std::vector<T> row{coarse};
        double diff = std::numeric_limits<double>::infinity();
        for (int d = 0; d < cfg.max_doublings; ++d) {
            n *= 2;
            std::vector<T> next{detail::midpoint_sum<T>(f, lo, hi, n)};
            if (detail::is_infinite(next[0])) return {next[0], 0.0};
            double factor = 4.0;
            for (std::size_t m = 1; m <= std::min(row.size(), max_order); ++m, factor *= 4.0)
                next.push_back(next[m - 1] + (next[m - 1] - row[m - 1]) / (factor - 1.0));
            const double extrapolated = detail::magnitude(next.back() - row.back());
            const double raw = detail::magnitude(next[0] - row[0]) / 3.0;
            diff = std::min(extrapolated, raw);
            coarse = extrapolated <= raw ? next.back() : next[0];
            row = std::move(next);
            if (diff < seg_tol || diff < 1e-15 * detail::magnitude(coarse)) break;
        }
        const bool converged = diff < seg_tol || diff < 1e-15 * detail::magnitude(coarse);
        if (!converged && mode == Convergence::best_effort) {
            total.value += coarse;
            total.error += diff;
            continue;
        }
        if (!converged)
            throw ConvergenceError("quadrature did not converge on [" + std::to_string(lo) + ", " +
                                   std::to_string(hi) + "]: last change " + std::to_string(diff));
        total.value += coarse;
        total.error += diff;
    }
    return total;
}

/// -x log2 x with the 0 log 0 = 0 convention.
inline double neg_xlog2x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace wit
