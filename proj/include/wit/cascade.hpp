#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <memory>
#include <numbers>
#include <vector>

#include "wit/filter_bank.hpp"
#include "wit/wavelet.hpp"

namespace wit {

/// Number of two-scale refinements used to tabulate filter-bank wavelets.
inline constexpr int cascade_iterations = 8;

/// psi of an orthogonal filter bank, tabulated by the cascade algorithm.
///
/// Starting from the box on [0, 1), seven low-pass refinements give the
/// scaling function on a 2^-7 grid and one high-pass step gives psi on a
/// 2^-8 grid over [0, L - 1]. The tabulated function is piecewise constant,
/// so it has exactly unit energy and zero mean. Its spectrum is the exact
/// transform of that step function:
///   Psi(w) = m1(w/2) prod_{k=2..8} m0(w/2^k) B(w/2^8),
/// with m0(w) = sum h_l e^{-jwl} / sqrt2, m1 likewise with g, and B the box spectrum.
struct CascadeTable {
    std::vector<double> h;
    std::vector<double> g;
    std::vector<double> values;  ///< psi on cells [m, m+1) * step
    double step = 0.0;

    double support_end() const { return static_cast<double>(h.size() - 1); }

    double time(double t) const {
        if (!(t >= 0.0)) return 0.0;
        const double pos = t / step;
        if (pos >= static_cast<double>(values.size())) return 0.0;
        return values[static_cast<std::size_t>(pos)];
    }

    complex spectrum(double w) const {
        // Horner evaluation of sum_l taps_l z^l with z = e^{-jx}.
        auto symbol = [](const std::vector<double>& taps, double x) {
            const complex z = std::polar(1.0, -x);
            complex acc{};
            for (auto it = taps.rbegin(); it != taps.rend(); ++it) acc = acc * z + *it;
            return acc / std::numbers::sqrt2;
        };
        complex out = symbol(g, w / 2.0);
        double scale = 4.0;
        for (int k = 2; k <= cascade_iterations; ++k, scale *= 2.0) out *= symbol(h, w / scale);
        const double x = w * step;
        const complex box = x == 0.0 ? complex(1.0) : (1.0 - std::polar(1.0, -x)) / complex(0.0, x);
        return out * box;
    }
};

inline CascadeTable make_cascade_table(const OrthogonalFilterPair& p) {
    const std::size_t taps = p.length();
    if (taps < 2) throw PreconditionError("cascade needs at least two taps");
    std::vector<double> c{1.0};
    std::size_t stride = 1;
    for (int i = 0; i + 1 < cascade_iterations; ++i, stride *= 2) {
        std::vector<double> next(c.size() + (taps - 1) * stride, 0.0);
        for (std::size_t l = 0; l < taps; ++l) {
            const double hl = std::numbers::sqrt2 * p.h[l];
            for (std::size_t m = 0; m < c.size(); ++m) next[m + l * stride] += hl * c[m];
        }
        c = std::move(next);
    }
    CascadeTable t;
    t.values.assign(c.size() + (taps - 1) * stride, 0.0);
    for (std::size_t l = 0; l < taps; ++l) {
        const double gl = std::numbers::sqrt2 * p.g[l];
        for (std::size_t m = 0; m < c.size(); ++m) t.values[m + l * stride] += gl * c[m];
    }
    t.h = p.h;
    t.g = p.g;
    t.step = std::ldexp(1.0, -cascade_iterations);
    return t;
}

/// The filter bank's continuous wavelet, evaluated through its cascade table.
inline AnalyticWavelet cascade_wavelet(const OrthogonalFilterPair& p) {
    auto table = std::make_shared<const CascadeTable>(make_cascade_table(p));
    const double end = table->support_end();
    DomainInfo t{Decay::compact, 0.5 * end, end, table->step, 0.0, end, 0.0, {}};
    for (std::size_t m = 1; m < table->values.size(); ++m) t.breakpoints.push_back(static_cast<double>(m) * table->step);
    // w^2 |Psi|^2 is periodic with period 2pi/step; the search window spans
    // two periods and the remainder is handled by the 1/w^2 tail model.
    const double period = 2.0 * std::numbers::pi / table->step;
    const double feature = std::numbers::pi / static_cast<double>(p.length());
    DomainInfo f{Decay::inverse_square, 0.0, 2.0 * period / 50.0, feature, 0, 0, period, {}};
    return AnalyticWavelet(
        p.name, [table](double x) -> complex { return table->time(x); },
        [table](double w) { return table->spectrum(w); }, std::move(t), std::move(f), false);
}

}  // namespace wit
