#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <concepts>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wit/error.hpp"

namespace wit {

using complex = std::complex<double>;

/// How a wavelet's energy density falls off in one domain.
enum class Decay {
    compact,         ///< exactly zero outside [lo, hi]
    gaussian,        ///< super-exponential tails
    inverse_square,  ///< density ~ q(w) / w^2 with q periodic (jump discontinuities in time)
    algebraic,       ///< slower or irregular power law; truncation error only estimated
};

/// Support metadata for one domain (time in seconds, frequency in rad/s).
struct DomainInfo {
    Decay decay = Decay::gaussian;
    double center = 0.0;   ///< nominal centre of the energy density
    double width = 1.0;    ///< natural width; the support search spans +-50 of these
    double feature = 1.0;  ///< finest length scale the density varies on
    double lo = 0.0;       ///< compact support, valid when decay == compact
    double hi = 0.0;
    double period = 0.0;   ///< period of q(w) for inverse_square tails
    std::vector<double> breakpoints;  ///< interior discontinuities

    bool compact() const { return decay == Decay::compact; }

    /// The same domain after the affine change of variable x -> scale * x + shift.
    DomainInfo mapped(double scale, double shift) const {
        DomainInfo out = *this;
        const double s = std::abs(scale);
        out.center = scale * center + shift;
        out.width = s * width;
        out.feature = s * feature;
        out.period = s * period;
        out.lo = scale * (scale > 0 ? lo : hi) + shift;
        out.hi = scale * (scale > 0 ? hi : lo) + shift;
        for (double& b : out.breakpoints) b = scale * b + shift;
        if (scale < 0) std::reverse(out.breakpoints.begin(), out.breakpoints.end());
        return out;
    }
};

/// Anything with a closed-form time evaluator, spectrum and support metadata.
template <class W>
concept WaveletLike = requires(const W& w, double x) {
    { w.name() } -> std::convertible_to<std::string>;
    { w.time(x) } -> std::convertible_to<complex>;
    { w.spectrum(x) } -> std::convertible_to<complex>;
    { w.time_domain() } -> std::convertible_to<DomainInfo>;
    { w.frequency_domain() } -> std::convertible_to<DomainInfo>;
    { w.is_complex() } -> std::convertible_to<bool>;
};

/// A mother wavelet psi(t) with its Fourier transform Psi(w) = int psi(t) e^{-jwt} dt.
///
/// Evaluators are type-erased so catalog entries, filter-derived cascade
/// wavelets and user functions share one value type. Copies share the
/// (immutable) evaluator state.
class AnalyticWavelet {
public:
    using Evaluator = std::function<complex(double)>;

    AnalyticWavelet(std::string name, Evaluator time, Evaluator spectrum, DomainInfo time_info,
                    DomainInfo frequency_info, bool is_complex,
                    std::optional<double> admissibility = std::nullopt)
        : name_(std::move(name)),
          time_(std::move(time)),
          spectrum_(std::move(spectrum)),
          time_info_(std::move(time_info)),
          frequency_info_(std::move(frequency_info)),
          is_complex_(is_complex),
          admissibility_(admissibility) {}

    const std::string& name() const { return name_; }
    complex time(double t) const { return time_(t); }
    complex spectrum(double w) const { return spectrum_(w); }
    complex operator()(double t) const { return time_(t); }
    const DomainInfo& time_domain() const { return time_info_; }
    const DomainInfo& frequency_domain() const { return frequency_info_; }
    bool is_complex() const { return is_complex_; }
    bool is_compact() const { return time_info_.compact(); }
    /// Closed-form admissibility constant when one is known.
    std::optional<double> nominal_admissibility() const { return admissibility_; }

private:
    std::string name_;
    Evaluator time_;
    Evaluator spectrum_;
    DomainInfo time_info_;
    DomainInfo frequency_info_;
    bool is_complex_;
    std::optional<double> admissibility_;
};

/// psi_{a,b}(t) = psi((t - b) / a) / sqrt|a|, with spectrum sqrt|a| e^{-jwb} Psi(a w).
template <WaveletLike Mother = AnalyticWavelet>
class DaughterWavelet {
public:
    DaughterWavelet(Mother mother, double a, double b) : mother_(std::move(mother)), a_(a), b_(b) {
        if (a == 0.0 || !std::isfinite(a) || !std::isfinite(b))
            throw PreconditionError("daughter wavelet needs a finite nonzero scale and finite shift");
    }

    std::string name() const {
        return std::string(mother_.name()) + "(a=" + format(a_) + ",b=" + format(b_) + ")";
    }
    complex time(double t) const { return mother_.time((t - b_) / a_) / std::sqrt(std::abs(a_)); }
    complex spectrum(double w) const {
        return std::sqrt(std::abs(a_)) * std::polar(1.0, -w * b_) * mother_.spectrum(a_ * w);
    }
    complex operator()(double t) const { return time(t); }
    DomainInfo time_domain() const { return mother_.time_domain().mapped(a_, b_); }
    DomainInfo frequency_domain() const { return mother_.frequency_domain().mapped(1.0 / a_, 0.0); }
    bool is_complex() const { return mother_.is_complex(); }
    bool is_compact() const { return mother_.time_domain().compact(); }

    const Mother& mother() const { return mother_; }
    double scale() const { return a_; }
    double shift() const { return b_; }

    /// Type-erased copy, e.g. for storing alongside catalog wavelets.
    AnalyticWavelet as_wavelet() const {
        auto self = std::make_shared<const DaughterWavelet>(*this);
        std::optional<double> adm;
        if constexpr (std::same_as<Mother, AnalyticWavelet>) {
            if (auto c = mother_.nominal_admissibility()) adm = *c * std::abs(a_);
        }
        return AnalyticWavelet(
            name(), [self](double t) { return self->time(t); }, [self](double w) { return self->spectrum(w); },
            time_domain(), frequency_domain(), is_complex(), adm);
    }

private:
    static std::string format(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", v);
        return buf;
    }

    Mother mother_;
    double a_;
    double b_;
};

template <WaveletLike W>
DaughterWavelet<W> daughter(W mother, double a, double b) {
    return DaughterWavelet<W>(std::move(mother), a, b);
}

/// Point value of a wavelet (0 outside a compact support).
template <WaveletLike W>
complex evaluate_wavelet(const W& w, double t) {
    return w.time(t);
}

template <WaveletLike W>
complex wavelet_spectrum(const W& w, double omega) {
    return w.spectrum(omega);
}

/// Squared modulus of the time function: the time energy density.
template <WaveletLike W>
double time_density(const W& w, double t) {
    return std::norm(w.time(t));
}

/// |Psi(w)|^2 / 2pi: the frequency energy density.
template <WaveletLike W>
double spectral_density(const W& w, double omega) {
    return std::norm(w.spectrum(omega)) / (2.0 * std::numbers::pi);
}

}  // namespace wit
