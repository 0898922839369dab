#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wit/error.hpp"
#include "wit/quadrature.hpp"
#include "wit/wavelet.hpp"

namespace wit {

enum class Domain { time, frequency };

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    double center() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

struct EffectiveSupport {
    Interval time;
    Interval frequency;
};

/// Default half-width of the support search, in natural widths.
inline constexpr double support_search_widths = 50.0;

template <WaveletLike W>
DomainInfo domain_info(const W& w, Domain d) {
    return d == Domain::time ? DomainInfo(w.time_domain()) : DomainInfo(w.frequency_domain());
}

template <WaveletLike W>
double domain_density(const W& w, Domain d, double x) {
    return d == Domain::time ? time_density(w, x) : spectral_density(w, x);
}

inline Interval search_window(const DomainInfo& info, double widths = support_search_widths) {
    return {info.center - widths * info.width, info.center + widths * info.width};
}

/// Smallest interval symmetric about the energy centroid holding `fraction` of the
/// (unit) energy in one domain. Compact domains report their support.
template <WaveletLike W>
Interval effective_interval(const W& w, Domain d, double fraction, double widths = support_search_widths) {
    if (!(fraction > 0.0 && fraction < 1.0))
        throw PreconditionError("energy fraction must lie strictly between 0 and 1");
    const DomainInfo info = domain_info(w, d);
    if (info.compact()) return {info.lo, info.hi};

    const Interval win = search_window(info, widths);
    const double step = std::min(info.width, info.feature) / 32.0;
    const auto cells = static_cast<std::size_t>(std::clamp(std::ceil(win.length() / step), 64.0, 1.6e7));
    const double h = win.length() / static_cast<double>(cells);

    std::vector<double> prefix(cells + 1, 0.0);
    double first_moment = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double x = win.lo + (static_cast<double>(i) + 0.5) * h;
        const double m = domain_density(w, d, x) * h;
        prefix[i + 1] = prefix[i] + m;
        first_moment += x * m;
    }
    const double total = prefix.back();
    if (total < fraction)
        throw ConvergenceError("energy fraction " + std::to_string(fraction) + " not reached within +-" +
                               std::to_string(widths) + " natural widths of '" + std::string(w.name()) +
                               "' (captured " + std::to_string(total) + ")");
    const double centroid = first_moment / total;

    auto cumulative = [&](double x) {
        const double pos = std::clamp((x - win.lo) / h, 0.0, static_cast<double>(cells));
        const auto i = static_cast<std::size_t>(std::min(std::floor(pos), static_cast<double>(cells - 1)));
        return prefix[i] + (pos - static_cast<double>(i)) * (prefix[i + 1] - prefix[i]);
    };
    double lo_r = 0.0;
    double hi_r = std::max(centroid - win.lo, win.hi - centroid);
    for (int it = 0; it < 200 && hi_r - lo_r > 1e-13 * info.width; ++it) {
        const double mid = 0.5 * (lo_r + hi_r);
        if (cumulative(centroid + mid) - cumulative(centroid - mid) >= fraction)
            hi_r = mid;
        else
            lo_r = mid;
    }
    return {centroid - hi_r, centroid + hi_r};
}

template <WaveletLike W>
EffectiveSupport effective_support(const W& w, double fraction, double widths = support_search_widths) {
    return {effective_interval(w, Domain::time, fraction, widths),
            effective_interval(w, Domain::frequency, fraction, widths)};
}

/// Quadrature window for one domain: the compact support, the effective
/// support at cfg.window_fraction for Gaussian decay, or the full search
/// window for power-law decay. Half-width overrides in cfg take precedence.
template <WaveletLike W>
Interval integration_window(const W& w, Domain d, const QuadratureConfig& cfg) {
    const DomainInfo info = domain_info(w, d);
    const auto& override_hw = d == Domain::time ? cfg.time_half_width : cfg.frequency_half_width;
    if (info.compact()) return {info.lo, info.hi};
    if (override_hw) return {info.center - *override_hw, info.center + *override_hw};
    if (info.decay == Decay::gaussian) return effective_interval(w, d, cfg.window_fraction);
    return search_window(info);
}

/// integration_window for sums of amplitudes rather than energies. Amplitude
/// tails shrink only as the square root of energy tails, so a Gaussian window
/// without an override is doubled about its centre.
template <WaveletLike W>
Interval amplitude_window(const W& w, Domain d, const QuadratureConfig& cfg) {
    const DomainInfo info = domain_info(w, d);
    const Interval win = integration_window(w, d, cfg);
    const auto& override_hw = d == Domain::time ? cfg.time_half_width : cfg.frequency_half_width;
    if (info.decay != Decay::gaussian || override_hw) return win;
    const double mid = 0.5 * (win.lo + win.hi);
    const double half = win.hi - win.lo;
    return {mid - half, mid + half};
}

/// Integration breakpoints for one domain: window ends plus interior discontinuities.
template <WaveletLike W>
std::vector<double> integration_segments(const W& w, Domain d, const QuadratureConfig& cfg) {
    const DomainInfo info = domain_info(w, d);
    const Interval win = integration_window(w, d, cfg);
    return make_segments(win.lo, win.hi, info.breakpoints);
}

}  // namespace wit
