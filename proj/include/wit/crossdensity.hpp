#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wit/error.hpp"
#include "wit/quadrature.hpp"
#include "wit/support.hpp"
#include "wit/wavelet.hpp"

namespace wit {

/// Everything the mixed time-frequency construction psi(z) + Psi(z)/sqrt(2pi) yields.
struct CrossDensityResult {
    complex integral;             ///< (1/sqrt2pi) int psi(z) Psi*(z) dz
    complex reflected_integral;   ///< (1/sqrt2pi) int psi(z) Psi*(-z) dz
    double cross_term = 0.0;      ///< |integral|: 1 exactly for Fourier eigenfunctions
    double mixed_inner_product = 0.0;  ///< int |psi + Psi/sqrt2pi|^2 = 2 + 2 Re(integral)
    double abs_bound = 0.0;       ///< (1/sqrt2pi) (int |psi|)^2
};

namespace detail {

inline constexpr double inv_sqrt_2pi = 0.398942280401432677939946059934;

/// Mixed-domain identities are checked to 1e-9, below the default 1e-8
/// truncation, so Gaussian windows are widened here.
inline QuadratureConfig widened(QuadratureConfig cfg) {
    cfg.window_fraction = std::max(cfg.window_fraction, 1.0 - 1e-13);
    return cfg;
}

struct AxisPart {
    std::vector<double> segments;
    double resolution = 0.0;
};

/// Shared z-axis pieces for integrands mixing psi(z) and Psi(z). Outside a
/// compact time support only the spectrum varies, so those pieces are
/// sampled at the frequency resolution.
template <WaveletLike W>
std::vector<AxisPart> shared_axis(const W& w, const QuadratureConfig& base, bool product) {
    const QuadratureConfig cfg = widened(base);
    const DomainInfo ti = w.time_domain();
    const DomainInfo fi = w.frequency_domain();
    const double fine = std::min(ti.feature, fi.feature);
    const Interval t = integration_window(w, Domain::time, cfg);
    // A product with psi vanishes outside a compact time support.
    if (product && ti.compact()) return {{make_segments(t.lo, t.hi, ti.breakpoints), fine}};
    const Interval f = integration_window(w, Domain::frequency, cfg);
    const double lo = std::min(t.lo, f.lo);
    const double hi = std::max(t.hi, f.hi);
    if (!ti.compact()) {
        std::vector<double> interior = ti.breakpoints;
        interior.insert(interior.end(), fi.breakpoints.begin(), fi.breakpoints.end());
        return {{make_segments(lo, hi, interior), fine}};
    }
    std::vector<AxisPart> parts{{make_segments(t.lo, t.hi, ti.breakpoints), fine}};
    if (lo < t.lo) parts.push_back({make_segments(lo, t.lo, fi.breakpoints), fi.feature});
    if (hi > t.hi) parts.push_back({make_segments(t.hi, hi, fi.breakpoints), fi.feature});
    return parts;
}

/// Sums integrate() over the parts, splitting the tolerance by length.
template <class T, class F>
Integral<T> integrate_parts(F&& f, const std::vector<AxisPart>& parts, const QuadratureConfig& cfg) {
    double total_length = 0.0;
    for (const auto& p : parts) total_length += p.segments.back() - p.segments.front();
    Integral<T> out;
    for (const auto& p : parts) {
        QuadratureConfig local = cfg;
        local.tolerance = cfg.tolerance * std::max((p.segments.back() - p.segments.front()) / total_length, 0.1);
        auto r = integrate<T>(f, p.segments, p.resolution, local);
        out.value += r.value;
        out.error += r.error;
    }
    return out;
}

}  // namespace detail

/// (1/sqrt2pi) int psi(z) Psi*(z) dz.
template <WaveletLike W>
complex cross_integral(const W& w, const QuadratureConfig& cfg = {}) {
    auto r = detail::integrate_parts<complex>([&](double z) { return w.time(z) * std::conj(w.spectrum(z)); },
                                              detail::shared_axis(w, cfg, true), cfg);
    return r.value * detail::inv_sqrt_2pi;
}

/// (1/sqrt2pi) int psi(z) Psi*(-z) dz; equals cross_integral up to conjugation for real psi.
template <WaveletLike W>
complex reflected_cross_integral(const W& w, const QuadratureConfig& cfg = {}) {
    auto parts = detail::shared_axis(w, cfg, true);
    if (!DomainInfo(w.time_domain()).compact()) {
        // Psi(-z) lives on the mirrored frequency window.
        const Interval f = integration_window(w, Domain::frequency, detail::widened(cfg));
        auto& segs = parts.front().segments;
        segs = make_segments(std::min(segs.front(), -f.hi), std::max(segs.back(), -f.lo), segs);
    }
    auto r = detail::integrate_parts<complex>([&](double z) { return w.time(z) * std::conj(w.spectrum(-z)); },
                                              parts, cfg);
    return r.value * detail::inv_sqrt_2pi;
}

/// Modulus of the normalized cross integral; at most 1 by Cauchy-Schwarz,
/// with equality exactly when Psi/sqrt2pi is a unimodular multiple of psi.
template <WaveletLike W>
double cross_term(const W& w, const QuadratureConfig& cfg = {}) {
    return std::abs(cross_integral(w, cfg));
}

/// int |psi(z) + Psi(z)/sqrt2pi|^2 dz, integrated directly.
template <WaveletLike W>
double mixed_inner_product(const W& w, const QuadratureConfig& cfg = {}) {
    const auto parts = detail::shared_axis(w, cfg, false);
    auto r = detail::integrate_parts<double>(
        [&](double z) { return std::norm(w.time(z) + w.spectrum(z) * detail::inv_sqrt_2pi); }, parts, cfg);
    double lo = parts.front().segments.front();
    double hi = parts.front().segments.back();
    for (const auto& p : parts) {
        lo = std::min(lo, p.segments.front());
        hi = std::max(hi, p.segments.back());
    }
    double tail = 0.0;
    const DomainInfo fi = w.frequency_domain();
    if (fi.decay == Decay::inverse_square && fi.period > 0.0) {
        // Only the spectrum reaches past the window; its energy there is <q>/R per side.
        auto mean_q = [&](double start) {
            constexpr int samples = 4096;
            const double h = fi.period / samples;
            double acc = 0.0;
            for (int i = 0; i < samples; ++i) {
                const double x = start + (i + 0.5) * h;
                acc += x * x * spectral_density(w, x);
            }
            return acc / samples;
        };
        tail = mean_q(hi) / (hi - fi.center) + mean_q(lo - fi.period) / (fi.center - lo);
    }
    return r.value + tail;
}

/// (1/sqrt2pi) (int |psi|)^2, the absolute-integrability bound on the cross term.
template <WaveletLike W>
double absolute_bound(const W& w, const QuadratureConfig& cfg = {}) {
    const DomainInfo ti = w.time_domain();
    const Interval win = amplitude_window(w, Domain::time, cfg);
    auto r = integrate<double>([&](double t) { return std::abs(w.time(t)); },
                               make_segments(win.lo, win.hi, ti.breakpoints), ti.feature, cfg);
    return r.value * r.value * detail::inv_sqrt_2pi;
}

/// True when |cross_term| >= 1 - tol.
template <WaveletLike W>
bool is_invariant_wavelet(const W& w, double tol, const QuadratureConfig& cfg = {}) {
    if (!(tol > 0.0)) throw PreconditionError("invariance tolerance must be > 0");
    return cross_term(w, cfg) >= 1.0 - tol;
}

template <WaveletLike W>
CrossDensityResult cross_density(const W& w, const QuadratureConfig& cfg = {}) {
    CrossDensityResult r;
    r.integral = cross_integral(w, cfg);
    r.reflected_integral = reflected_cross_integral(w, cfg);
    r.cross_term = std::abs(r.integral);
    r.mixed_inner_product = mixed_inner_product(w, cfg);
    r.abs_bound = absolute_bound(w, cfg);
    return r;
}

}  // namespace wit
