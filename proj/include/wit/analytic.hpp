#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "wit/wavelet.hpp"

namespace wit {

/// Centre frequency of the Morlet family (rad/s).
inline constexpr double morlet_center_frequency = 5.0;

/// Unit-energy Haar wavelet on [0, 2): +1/sqrt2 on [0, 1), -1/sqrt2 on [1, 2).
///
/// The support length 2 makes psi^2 the uniform density 1/2, so the time
/// entropy is exactly one bit. Spectrum: (1 - e^{-jw})^2 / (jw sqrt2).
inline AnalyticWavelet haar_wavelet() {
    constexpr double amp = std::numbers::sqrt2 / 2.0;
    auto time = [](double t) -> complex {
        if (t >= 0.0 && t < 1.0) return amp;
        if (t >= 1.0 && t < 2.0) return -amp;
        return 0.0;
    };
    auto spectrum = [](double w) -> complex {
        if (w == 0.0) return 0.0;
        const complex one_minus = 1.0 - std::polar(1.0, -w);
        return one_minus * one_minus / (complex(0.0, w) * std::numbers::sqrt2);
    };
    DomainInfo t{Decay::compact, 1.0, 2.0, 1.0, 0.0, 2.0, 0.0, {1.0}};
    // |Psi|^2 = 8 sin^4(w/2) / w^2: period 2pi modulation on a 1/w^2 envelope.
    DomainInfo f{Decay::inverse_square, 0.0, 128.0 * std::numbers::pi, 2.0 * std::numbers::pi / 8.0, 0, 0,
                 2.0 * std::numbers::pi, {}};
    return {"haar", time, spectrum, t, f, false, 4.0 * std::numbers::ln2};
}

/// Complex Morlet with exact zero mean: C (e^{j w0 t} - e^{-w0^2/2}) e^{-t^2/2}.
inline AnalyticWavelet complex_morlet(double w0 = morlet_center_frequency) {
    const double kappa = std::exp(-0.5 * w0 * w0);
    const double norm =
        std::pow(std::numbers::pi, -0.25) / std::sqrt(1.0 - 2.0 * std::exp(-0.75 * w0 * w0) + std::exp(-w0 * w0));
    const double spec_norm = norm * std::sqrt(2.0 * std::numbers::pi);
    auto time = [=](double t) -> complex {
        return norm * (std::polar(1.0, w0 * t) - kappa) * std::exp(-0.5 * t * t);
    };
    auto spectrum = [=](double w) -> complex {
        const double d = w - w0;
        return spec_norm * (std::exp(-0.5 * d * d) - kappa * std::exp(-0.5 * w * w));
    };
    DomainInfo t{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    DomainInfo f{Decay::gaussian, w0, 1.0, 1.0, 0, 0, 0, {}};
    return {"cmor", time, spectrum, t, f, true};
}

/// Real Morlet with exact zero mean: C (cos(w0 t) - e^{-w0^2/2}) e^{-t^2/2}.
inline AnalyticWavelet real_morlet(double w0 = morlet_center_frequency) {
    const double kappa = std::exp(-0.5 * w0 * w0);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    const double energy = 0.5 * sqrt_pi * (1.0 + std::exp(-w0 * w0)) -
                          2.0 * kappa * sqrt_pi * std::exp(-0.25 * w0 * w0) + kappa * kappa * sqrt_pi;
    const double norm = 1.0 / std::sqrt(energy);
    const double spec_norm = norm * std::sqrt(2.0 * std::numbers::pi);
    auto time = [=](double t) -> complex { return norm * (std::cos(w0 * t) - kappa) * std::exp(-0.5 * t * t); };
    auto spectrum = [=](double w) -> complex {
        const double dm = w - w0;
        const double dp = w + w0;
        return spec_norm * (0.5 * (std::exp(-0.5 * dm * dm) + std::exp(-0.5 * dp * dp)) - kappa * std::exp(-0.5 * w * w));
    };
    const double ripple = std::numbers::pi / w0;
    DomainInfo t{Decay::gaussian, 0.0, 1.0, ripple, 0, 0, 0, {}};
    DomainInfo f{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    return {"morlet", time, spectrum, t, f, false};
}

/// Unit-energy first derivative of the Gaussian e^{-t^2/2}: psi(t) = -C t e^{-t^2/2}, C = sqrt2 pi^{-1/4}.
///
/// Psi(w) = j C sqrt(2pi) w e^{-w^2/2} = -j sqrt(2pi) psi(w), so gauss1 is a Fourier eigenfunction.
inline AnalyticWavelet gauss1_wavelet() {
    const double c = std::numbers::sqrt2 * std::pow(std::numbers::pi, -0.25);
    const double spec = c * std::sqrt(2.0 * std::numbers::pi);
    auto time = [=](double t) -> complex { return -c * t * std::exp(-0.5 * t * t); };
    auto spectrum = [=](double w) -> complex { return complex(0.0, spec * w * std::exp(-0.5 * w * w)); };
    DomainInfo t{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    DomainInfo f{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    return {"gauss1", time, spectrum, t, f, false, 4.0 * std::sqrt(std::numbers::pi)};
}

/// Mexican hat (negated, normalized second Gaussian derivative): C (1 - t^2) e^{-t^2/2}.
inline AnalyticWavelet mexican_hat() {
    const double c = 2.0 / (std::sqrt(3.0) * std::pow(std::numbers::pi, 0.25));
    const double spec = c * std::sqrt(2.0 * std::numbers::pi);
    auto time = [=](double t) -> complex { return c * (1.0 - t * t) * std::exp(-0.5 * t * t); };
    auto spectrum = [=](double w) -> complex { return spec * w * w * std::exp(-0.5 * w * w); };
    DomainInfo t{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    DomainInfo f{Decay::gaussian, 0.0, 1.0, 1.0, 0, 0, 0, {}};
    return {"mexh", time, spectrum, t, f, false, 8.0 * std::sqrt(std::numbers::pi) / 3.0};
}

}  // namespace wit
