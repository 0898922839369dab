#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wit/error.hpp"
#include "wit/filter_bank.hpp"
#include "wit/quadrature.hpp"
#include "wit/support.hpp"
#include "wit/wavelet.hpp"

namespace wit {

enum class EntropyDomain { time, frequency, global };

inline const char* to_string(EntropyDomain d) {
    switch (d) {
        case EntropyDomain::time: return "time";
        case EntropyDomain::frequency: return "frequency";
        case EntropyDomain::global: return "global";
    }
    return "?";
}

struct EntropyResult {
    double value = 0.0;            ///< bits
    double estimated_error = 0.0;  ///< bits, >= 0
    EntropyDomain domain = EntropyDomain::time;
    std::string note;
};

namespace detail {

struct TailAverages {
    double q = 0.0;       ///< period mean of w^2 s(w)
    double q_log_q = 0.0; ///< period mean of -(w^2 s) log2(w^2 s)
};

template <WaveletLike W>
TailAverages tail_averages(const W& w, double start, double period) {
    constexpr int samples = 4096;
    TailAverages a;
    const double h = period / samples;
    for (int i = 0; i < samples; ++i) {
        const double x = start + (i + 0.5) * h;
        const double q = x * x * spectral_density(w, x);
        a.q += q;
        a.q_log_q += neg_xlog2x(q);
    }
    a.q /= samples;
    a.q_log_q /= samples;
    return a;
}

/// -int_R^inf s log2 s dw for s = q(w)/w^2 with q periodic, from period means.
inline double inverse_square_tail(const TailAverages& a, double r) {
    return a.q_log_q / r + 2.0 * a.q * (std::log2(r) + 1.0 / std::numbers::ln2) / r;
}

}  // namespace detail

/// Differential entropy of |psi(t)|^2 in bits.
template <WaveletLike W>
EntropyResult time_entropy(const W& w, const QuadratureConfig& cfg = {}) {
    const DomainInfo info = w.time_domain();
    const auto segments = integration_segments(w, Domain::time, cfg);
    auto r = integrate<double>([&](double t) { return neg_xlog2x(time_density(w, t)); }, segments, info.feature, cfg);
    return {r.value, r.error, EntropyDomain::time, ""};
}

/// Differential entropy of |Psi(w)|^2 / 2pi in bits.
///
/// Spectra with a 1/w^2 envelope are integrated over the support search
/// window; the part beyond it is added from the period-averaged tail model
/// and its uncertainty is folded into estimated_error.
template <WaveletLike W>
EntropyResult frequency_entropy(const W& w, const QuadratureConfig& cfg = {}) {
    const DomainInfo info = w.frequency_domain();
    const Interval win = integration_window(w, Domain::frequency, cfg);
    const auto segments = make_segments(win.lo, win.hi, info.breakpoints);
    auto r = integrate<double>([&](double x) { return neg_xlog2x(spectral_density(w, x)); }, segments, info.feature,
                               cfg);
    EntropyResult out{r.value, r.error, EntropyDomain::frequency, ""};
    if (info.decay == Decay::inverse_square && info.period > 0.0) {
        const double right = win.hi - info.center;
        const double left = info.center - win.lo;
        const double tail = detail::inverse_square_tail(detail::tail_averages(w, win.hi, info.period), right) +
                            detail::inverse_square_tail(detail::tail_averages(w, win.lo - info.period, info.period), left);
        out.value += tail;
        out.estimated_error += std::abs(tail) * info.period / std::min(left, right);
        out.note = "slow spectral decay (1/w^2): includes modelled tail of " + std::to_string(tail) + " bits";
    } else if (info.decay == Decay::algebraic) {
        auto mass = integrate<double>([&](double x) { return spectral_density(w, x); }, segments, info.feature, cfg);
        const double missing = std::max(0.0, 1.0 - mass.value);
        out.estimated_error += missing * std::max(1.0, std::log2(win.length()));
        out.note = "slow spectral decay: " + std::to_string(missing) + " of the energy lies outside the window";
    }
    return out;
}

/// H_t + H_f: invariant under dilation and translation.
template <WaveletLike W>
EntropyResult global_entropy(const W& w, const QuadratureConfig& cfg = {}) {
    const auto t = time_entropy(w, cfg);
    const auto f = frequency_entropy(w, cfg);
    return {t.value + f.value, t.estimated_error + f.estimated_error, EntropyDomain::global, f.note};
}

/// Shannon entropy in bits of a discrete probability vector (0 log 0 = 0).
inline double discrete_entropy(std::span<const double> p, double tolerance = 1e-10) {
    double total = 0.0;
    double h = 0.0;
    for (double v : p) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw PreconditionError("probabilities must be finite and >= 0");
        total += v;
        h += neg_xlog2x(v);
    }
    if (std::abs(total - 1.0) > tolerance)
        throw PreconditionError("probabilities sum to " + std::to_string(total) + ", not 1");
    return h;
}

enum class FilterBranch { highpass, lowpass };

/// Entropy of the squared taps {g_k^2} (or {h_k^2}) of an orthogonal filter bank.
/// The squares are divided by their sum, which removes the last-bit rounding
/// of decimal taps (db1 gives exactly one bit).
inline double mra_entropy(const OrthogonalFilterPair& p, FilterBranch branch = FilterBranch::highpass) {
    const auto& taps = branch == FilterBranch::highpass ? p.g : p.h;
    std::vector<double> density;
    density.reserve(taps.size());
    for (double c : taps) density.push_back(c * c);
    double total = 0.0;
    for (double d : density) total += d;
    if (std::abs(total - 1.0) > 1e-10)
        throw PreconditionError("invalid filter '" + p.name + "': squared taps sum to " + std::to_string(total));
    for (double& d : density) d /= total;
    return discrete_entropy(density);
}

/// Cross-entropy bound on the global entropy:
///   -int |psi|^2 log2(|Psi|^2/2pi) - int (|Psi|^2/2pi) log2 |psi|^2,
/// both densities taken on the shared axis. +inf when one density vanishes
/// where the other carries mass. Zeros of one density inside the other's
/// support put log singularities in the integrand, so this is evaluated
/// best-effort and the residual change is reported as estimated_error.
template <WaveletLike W>
EntropyResult entropy_upper_bound(const W& w, const QuadratureConfig& cfg = {}) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const DomainInfo ti = w.time_domain();
    const DomainInfo fi = w.frequency_domain();
    auto cross = [](double p, double q) {
        if (p <= 0.0) return 0.0;
        if (q <= 0.0) return inf;
        return -p * std::log2(q);
    };
    auto first = integrate<double>([&](double t) { return cross(time_density(w, t), spectral_density(w, t)); },
                                   integration_segments(w, Domain::time, cfg), std::min(ti.feature, fi.feature), cfg,
                                   Convergence::best_effort);
    if (std::isinf(first.value)) return {inf, 0.0, EntropyDomain::global, "time density not covered"};
    auto second = integrate<double>([&](double x) { return cross(spectral_density(w, x), time_density(w, x)); },
                                    integration_segments(w, Domain::frequency, cfg),
                                    std::min(ti.feature, fi.feature), cfg, Convergence::best_effort);
    if (std::isinf(second.value))
        return {inf, 0.0, EntropyDomain::global, "spectral density not covered by the time density"};
    return {first.value + second.value, first.error + second.error, EntropyDomain::global, ""};
}

}  // namespace wit
