#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "wit/analytic.hpp"
#include "wit/error.hpp"
#include "wit/quadrature.hpp"
#include "wit/support.hpp"
#include "wit/wavelet.hpp"

namespace wit {

enum class DistanceVariant { D1_time, D2_time_frequency, normalized_D1 };

inline const char* to_string(DistanceVariant v) {
    switch (v) {
        case DistanceVariant::D1_time: return "D1_time";
        case DistanceVariant::D2_time_frequency: return "D2_time_frequency";
        case DistanceVariant::normalized_D1: return "normalized_D1";
    }
    return "?";
}

struct DistanceResult {
    double value = 0.0;  ///< bits, possibly +inf
    double estimated_error = 0.0;
    DistanceVariant variant = DistanceVariant::D1_time;
    double lambda = 1.0;  ///< time support ratio |S2| / |S1|
    double mu = 1.0;      ///< frequency support ratio (D2 only)
};

/// Energy fraction that defines the effective supports of non-compact wavelets.
inline constexpr double default_divergence_fraction = 1.0 - 1e-4;

namespace detail {

template <WaveletLike W>
Interval distance_support(const W& w, Domain d, double fraction) {
    return effective_interval(w, d, fraction);
}

/// Relative-entropy integral of w1's density against w2's density pulled
/// back by the affine map sending s1 onto s2 (left edges aligned).
/// Literal form: int_{s1} d1 log2(d1 / d2(map)). Normalized form: both
/// sides renormalized over s1 as densities, including the Jacobian.
template <WaveletLike A, WaveletLike B>
Integral<double> relative_entropy(const A& w1, const B& w2, Domain d, Interval s1, Interval s2, bool normalized,
                                  const QuadratureConfig& cfg) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const double lambda = s2.length() / s1.length();
    auto map = [&](double x) { return s2.lo + lambda * (x - s1.lo); };
    auto d1 = [&](double x) { return domain_density(w1, d, x); };
    auto d2 = [&](double x) { return domain_density(w2, d, map(x)); };

    const DomainInfo i1 = domain_info(w1, d);
    const DomainInfo i2 = domain_info(w2, d);
    std::vector<double> interior = i1.breakpoints;
    for (double b : i2.breakpoints) interior.push_back(s1.lo + (b - s2.lo) / lambda);
    if (i2.compact()) interior.insert(interior.end(), {s1.lo + (i2.lo - s2.lo) / lambda, s1.lo + (i2.hi - s2.lo) / lambda});
    const auto segments = make_segments(s1.lo, s1.hi, interior);
    const double resolution = std::min(i1.feature, i2.feature / lambda);

    const double jacobian = normalized ? lambda : 1.0;
    auto integrand = [&](double x) {
        const double p = d1(x);
        if (p <= 0.0) return 0.0;
        const double q = jacobian * d2(x);
        if (q <= 0.0) return inf;
        return p * std::log2(p / q);
    };
    auto r = integrate<double>(integrand, segments, resolution, cfg, Convergence::best_effort);
    if (!normalized || std::isinf(r.value)) return r;
    const auto z1 = integrate<double>(d1, segments, resolution, cfg);
    const auto z2 = integrate<double>([&](double x) { return lambda * d2(x); }, segments, resolution, cfg);
    return {r.value / z1.value + std::log2(z2.value / z1.value), r.error / z1.value + z1.error + z2.error};
}

template <WaveletLike A, WaveletLike B>
DistanceResult time_distance(const A& w1, const B& w2, bool normalized, double fraction, const QuadratureConfig& cfg) {
    const Interval s1 = distance_support(w1, Domain::time, fraction);
    const Interval s2 = distance_support(w2, Domain::time, fraction);
    const auto r = relative_entropy(w1, w2, Domain::time, s1, s2, normalized, cfg);
    return {r.value, r.error, normalized ? DistanceVariant::normalized_D1 : DistanceVariant::D1_time,
            s2.length() / s1.length(), 1.0};
}

}  // namespace detail

/// Literal wavelet distance int_{S1} psi1^2 log2(psi1^2 / psi2^2(lambda t)), lambda = |S2|/|S1|.
///
/// No Jacobian: a wavelet and its own daughter are log2|a| bits apart.
template <WaveletLike A, WaveletLike B>
DistanceResult kl_distance_time(const A& w1, const B& w2, const QuadratureConfig& cfg = {},
                                double fraction = default_divergence_fraction) {
    return detail::time_distance(w1, w2, false, fraction, cfg);
}

/// Kullback-Leibler divergence between psi1^2 and lambda psi2^2(lambda t), both
/// renormalized over S1. Zero for a wavelet and any of its daughters.
template <WaveletLike A, WaveletLike B>
DistanceResult kl_distance_normalized(const A& w1, const B& w2, const QuadratureConfig& cfg = {},
                                      double fraction = default_divergence_fraction) {
    return detail::time_distance(w1, w2, true, fraction, cfg);
}

/// Time term plus frequency term, each over w1's effective support, with
/// support ratios lambda (time) and mu (frequency). The frequency term uses
/// the spectral densities |Psi|^2 / 2pi.
template <WaveletLike A, WaveletLike B>
DistanceResult kl_distance_full(const A& w1, const B& w2, const QuadratureConfig& cfg = {},
                                double fraction = default_divergence_fraction) {
    const Interval t1 = detail::distance_support(w1, Domain::time, fraction);
    const Interval t2 = detail::distance_support(w2, Domain::time, fraction);
    const Interval f1 = detail::distance_support(w1, Domain::frequency, fraction);
    const Interval f2 = detail::distance_support(w2, Domain::frequency, fraction);
    const auto t = detail::relative_entropy(w1, w2, Domain::time, t1, t2, false, cfg);
    DistanceResult out{t.value, t.error, DistanceVariant::D2_time_frequency, t2.length() / t1.length(),
                       f2.length() / f1.length()};
    if (std::isinf(t.value)) return out;
    const auto f = detail::relative_entropy(w1, w2, Domain::frequency, f1, f2, false, cfg);
    out.value += f.value;
    out.estimated_error += f.error;
    return out;
}

/// Normalized distance from the flat (Haar) density.
template <WaveletLike W>
double divergence_from_equiprobability(const W& w, const QuadratureConfig& cfg = {},
                                       double fraction = default_divergence_fraction) {
    return kl_distance_normalized(w, haar_wavelet(), cfg, fraction).value;
}

/// -int psi1^2 log2 psi2^2 over w1's time window; never below H_t(w1).
template <WaveletLike A, WaveletLike B>
Integral<double> gibbs_cross_entropy(const A& w1, const B& w2, const QuadratureConfig& cfg = {}) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const DomainInfo i1 = w1.time_domain();
    const DomainInfo i2 = w2.time_domain();
    const Interval win = integration_window(w1, Domain::time, cfg);
    std::vector<double> interior = i1.breakpoints;
    interior.insert(interior.end(), i2.breakpoints.begin(), i2.breakpoints.end());
    if (i2.compact()) interior.insert(interior.end(), {i2.lo, i2.hi});
    auto integrand = [&](double t) {
        const double p = time_density(w1, t);
        if (p <= 0.0) return 0.0;
        const double q = time_density(w2, t);
        if (q <= 0.0) return inf;
        return -p * std::log2(q);
    };
    return integrate<double>(integrand, make_segments(win.lo, win.hi, interior), std::min(i1.feature, i2.feature), cfg,
                             Convergence::best_effort);
}

/// sum p log2(p / q) for discrete densities; +inf when q = 0 < p.
inline double discrete_kl(std::span<const double> p, std::span<const double> q, double tolerance = 1e-10) {
    if (p.size() != q.size()) throw PreconditionError("discrete_kl: densities differ in length");
    double sp = 0.0;
    double sq = 0.0;
    double d = 0.0;
    bool infinite = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(p[i] >= 0.0) || !(q[i] >= 0.0)) throw PreconditionError("discrete_kl: negative probability");
        sp += p[i];
        sq += q[i];
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) infinite = true;
        else d += p[i] * std::log2(p[i] / q[i]);
    }
    if (std::abs(sp - 1.0) > tolerance || std::abs(sq - 1.0) > tolerance)
        throw PreconditionError("discrete_kl: densities must sum to 1");
    return infinite ? std::numeric_limits<double>::infinity() : d;
}

}  // namespace wit
