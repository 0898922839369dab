#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "wit/error.hpp"
#include "wit/quadrature.hpp"
#include "wit/signal.hpp"
#include "wit/support.hpp"
#include "wit/wavelet.hpp"

namespace wit {

/// Scale and translation sample points of a CWT evaluation.
struct CwtGrid {
    std::vector<double> scales;        ///< strictly increasing, > 0
    std::vector<double> translations;  ///< strictly increasing
};

/// CWT(a_i, b_j) on a grid, with the constants the joint density needs.
struct Scalogram {
    std::vector<double> scales;
    std::vector<double> translations;
    std::vector<complex> values;  ///< row-major, scales x translations
    double c_psi = 0.0;
    double energy = 0.0;
    std::string wavelet;

    std::size_t rows() const { return scales.size(); }
    std::size_t cols() const { return translations.size(); }
    complex at(std::size_t i, std::size_t j) const { return values[i * cols() + j]; }
    complex& at(std::size_t i, std::size_t j) { return values[i * cols() + j]; }
};

/// n points a_min * 2^{k / voices}, k = 0..n-1, with n the smallest count reaching a_max.
inline std::vector<double> log2_scales(double a_min, double a_max, int voices) {
    if (!(a_min > 0.0) || !(a_max >= a_min) || voices < 1)
        throw PreconditionError("log2_scales needs 0 < a_min <= a_max and voices >= 1");
    const int n = static_cast<int>(std::ceil(std::log2(a_max / a_min) * voices - 1e-9)) + 1;
    std::vector<double> s(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) s[static_cast<std::size_t>(k)] = a_min * std::exp2(static_cast<double>(k) / voices);
    return s;
}

inline std::vector<double> uniform_points(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) throw PreconditionError("uniform_points needs step > 0 and hi >= lo");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + static_cast<double>(i) * step;
    return v;
}

/// 32 log-spaced scales from 1 to N/2 and a translation at every sample.
inline CwtGrid default_grid(std::size_t n) {
    if (n < 2) throw PreconditionError("default_grid needs at least two samples");
    const double a_max = std::max(1.0, static_cast<double>(n) / 2.0);
    std::vector<double> scales(32);
    for (std::size_t k = 0; k < 32; ++k) scales[k] = std::pow(a_max, static_cast<double>(k) / 31.0);
    if (a_max == 1.0) scales.assign(1, 1.0);
    return {scales, uniform_points(0.0, static_cast<double>(n - 1), 1.0)};
}

/// Parameters of the grid that captures most of the resolution-of-identity mass.
struct RecommendedGridSpec {
    int voices = 4;              ///< scales per octave
    double translation_step = 1.0;
    double scale_span = 64.0;    ///< a_max = scale_span * N
    double margin = 4.0;         ///< translations extend margin * a_max past both ends
};

/// Scales from the aliasing limit a_min = max(1, w_hi / pi), where w_hi is the
/// upper edge of the wavelet's 0.99 frequency support, up to scale_span * N;
/// translations cover the signal plus margin * a_max on each side.
/// `density` multiplies both the voices and the translation rate.
template <WaveletLike W>
CwtGrid recommended_grid(const W& w, std::size_t n, int density = 1, const RecommendedGridSpec& spec = {}) {
    if (n < 2 || density < 1) throw PreconditionError("recommended_grid needs N >= 2 and density >= 1");
    const Interval f = effective_interval(w, Domain::frequency, 0.99);
    const double w_hi = std::max(std::abs(f.lo), std::abs(f.hi));
    const double a_min = std::max(1.0, w_hi / std::numbers::pi);
    const double a_max = spec.scale_span * static_cast<double>(n);
    const double step = spec.translation_step / density;
    const double reach = spec.margin * a_max;
    return {log2_scales(a_min, a_max, spec.voices * density),
            uniform_points(-reach, static_cast<double>(n - 1) + reach, step)};
}

/// Cell widths around grid points: log-midpoint edges for scales, linear
/// midpoints for translations; end cells mirror their neighbour.
inline std::vector<double> cell_widths(const std::vector<double>& x, bool logarithmic) {
    const std::size_t n = x.size();
    std::vector<double> w(n, 1.0);
    if (n < 2) return w;
    auto mid = [&](std::size_t i) { return logarithmic ? std::sqrt(x[i] * x[i + 1]) : 0.5 * (x[i] + x[i + 1]); };
    std::vector<double> edges(n + 1);
    for (std::size_t i = 0; i + 1 < n; ++i) edges[i + 1] = mid(i);
    if (logarithmic) {
        edges[0] = x[0] * x[0] / edges[1];
        edges[n] = x[n - 1] * x[n - 1] / edges[n - 1];
    } else {
        edges[0] = 2.0 * x[0] - edges[1];
        edges[n] = 2.0 * x[n - 1] - edges[n - 1];
    }
    for (std::size_t i = 0; i < n; ++i) w[i] = edges[i + 1] - edges[i];
    return w;
}

/// c_psi = int |Psi(w)|^2 / |w| dw.
template <WaveletLike W>
double admissibility_constant(const W& w, const QuadratureConfig& cfg = {}) {
    const complex dc = w.spectrum(0.0);
    if (std::abs(dc) > 1e-8)
        throw DivergenceError("admissibility constant diverges for '" + std::string(w.name()) +
                              "': Psi(0) = " + std::to_string(std::abs(dc)) + " (non-zero mean)");
    const DomainInfo fi = w.frequency_domain();
    const Interval win = integration_window(w, Domain::frequency, cfg);
    std::vector<double> interior = fi.breakpoints;
    interior.push_back(0.0);
    auto r = integrate<double>(
        [&](double x) { return x == 0.0 ? 0.0 : std::norm(w.spectrum(x)) / std::abs(x); },
        make_segments(std::min(win.lo, 0.0), std::max(win.hi, 0.0), interior), fi.feature, cfg);
    double value = r.value;
    if (fi.decay == Decay::inverse_square && fi.period > 0.0) {
        // |Psi|^2 / |w| = 2pi q / |w|^3 beyond the window: 2pi <q> / (2 R^2) per side.
        auto mean_q = [&](double start) {
            constexpr int samples = 4096;
            double acc = 0.0;
            for (int i = 0; i < samples; ++i) {
                const double x = start + (i + 0.5) * fi.period / samples;
                acc += x * x * spectral_density(w, x);
            }
            return acc / samples;
        };
        const double pi = std::numbers::pi;
        value += pi * mean_q(win.hi) / (win.hi * win.hi) + pi * mean_q(win.lo - fi.period) / (win.lo * win.lo);
    }
    if (!(value > 0.0) || !std::isfinite(value))
        throw DivergenceError("admissibility constant is not a positive finite number");
    return value;
}

/// Direct CWT: CWT(a, b) = sum_n f[n] conj(psi((n - b) / a)) / sqrt(a).
///
/// Each scale row is independent; rows are spread over `threads` workers
/// (0 = hardware concurrency) and every cell is computed by one worker, so
/// the result does not depend on scheduling.
template <WaveletLike W>
Scalogram cwt(const SampledSignal& f, const W& w, const CwtGrid& grid, unsigned threads = 0,
              const QuadratureConfig& cfg = {}) {
    if (grid.scales.empty() || grid.translations.empty()) throw PreconditionError("cwt needs a non-empty grid");
    for (std::size_t i = 0; i < grid.scales.size(); ++i) {
        if (!(grid.scales[i] > 0.0)) throw PreconditionError("cwt scales must be > 0");
        if (i > 0 && !(grid.scales[i] > grid.scales[i - 1]))
            throw PreconditionError("cwt scales must be strictly increasing");
    }
    Scalogram s;
    s.scales = grid.scales;
    s.translations = grid.translations;
    s.values.assign(grid.scales.size() * grid.translations.size(), complex{});
    s.energy = f.energy();
    s.wavelet = w.name();
    s.c_psi = admissibility_constant(w, cfg);

    // Samples outside the wavelet's time window contribute nothing.
    const Interval support = amplitude_window(w, Domain::time, cfg);
    const auto n = static_cast<long long>(f.size());
    auto row = [&](std::size_t i) {
        const double a = grid.scales[i];
        const double inv_sqrt_a = 1.0 / std::sqrt(a);
        for (std::size_t j = 0; j < grid.translations.size(); ++j) {
            const double b = grid.translations[j];
            const auto first = std::max(0LL, static_cast<long long>(std::ceil(b + a * support.lo)));
            const auto last = std::min(n - 1, static_cast<long long>(std::floor(b + a * support.hi)));
            complex acc{};
            for (long long k = first; k <= last; ++k)
                acc += f[static_cast<std::size_t>(k)] * std::conj(w.time((static_cast<double>(k) - b) / a));
            s.at(i, j) = acc * inv_sqrt_a;
        }
    };
    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.scales.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < grid.scales.size(); ++i) row(i);
        return s;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < grid.scales.size(); i += workers) row(i);
        });
    for (auto& th : pool) th.join();
    return s;
}

}  // namespace wit
