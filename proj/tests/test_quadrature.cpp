#include <cmath>
#include <numbers>
#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "wit/analytic.hpp"
#include "wit/quadrature.hpp"
#include "wit/support.hpp"

using Catch::Matchers::WithinAbs;

TEST_CASE("midpoint rule with extrapolation integrates smooth functions", "[quadrature]") {
    const wit::QuadratureConfig cfg;
    const std::vector<double> breaks{0.0, 1.0};
    auto cubic = wit::integrate<double>([](double x) { return 4.0 * x * x * x; }, breaks, 1.0, cfg);
    CHECK_THAT(cubic.value, WithinAbs(1.0, 1e-12));

    auto gauss = wit::integrate<double>([](double x) { return std::exp(-x * x); }, std::vector<double>{-8.0, 8.0},
                                        1.0, cfg);
    CHECK_THAT(gauss.value, WithinAbs(std::sqrt(std::numbers::pi), 1e-10));
    CHECK(gauss.error < 1e-8);
}

TEST_CASE("breakpoints keep piecewise integrands exact", "[quadrature]") {
    auto step = [](double x) { return x < 0.3 ? 1.0 : -2.0; };
    auto r = wit::integrate<double>(step, wit::make_segments(0.0, 1.0, std::vector<double>{0.3}), 1.0, {});
    CHECK_THAT(r.value, WithinAbs(0.3 - 1.4, 1e-13));
}

TEST_CASE("complex integrands", "[quadrature]") {
    auto r = wit::integrate<std::complex<double>>([](double t) { return std::polar(1.0, t); },
                                                  std::vector<double>{0.0, std::numbers::pi}, 0.5, {});
    CHECK_THAT(r.value.real(), WithinAbs(0.0, 1e-10));
    CHECK_THAT(r.value.imag(), WithinAbs(2.0, 1e-10));
}

TEST_CASE("make_segments sorts, clips and de-duplicates", "[quadrature]") {
    const auto s = wit::make_segments(0.0, 2.0, std::vector<double>{1.5, -1.0, 1.0, 1.0, 3.0});
    CHECK(s == std::vector<double>{0.0, 1.0, 1.5, 2.0});
}

TEST_CASE("non-convergence is an error unless best effort is requested", "[quadrature]") {
    wit::QuadratureConfig cfg;
    cfg.max_doublings = 1;
    cfg.tolerance = 1e-14;
    auto f = [](double x) { return std::sin(200.0 * x) * std::sin(200.0 * x) / std::sqrt(x); };
    const std::vector<double> breaks{0.0, 1.0};
    CHECK_THROWS_AS(wit::integrate<double>(f, breaks, 1.0, cfg), wit::ConvergenceError);
    auto r = wit::integrate<double>(f, breaks, 1.0, cfg, wit::Convergence::best_effort);
    CHECK(std::isfinite(r.value));
    CHECK(r.error > 0.0);
}

TEST_CASE("infinite samples short-circuit", "[quadrature]") {
    auto r = wit::integrate<double>([](double x) { return x > 0.5 ? INFINITY : 1.0; }, std::vector<double>{0.0, 1.0},
                                    1.0, {});
    CHECK(std::isinf(r.value));
}

TEST_CASE("configuration is validated", "[quadrature]") {
    wit::QuadratureConfig cfg;
    cfg.points = 10;
    CHECK_THROWS_AS(cfg.validate(), wit::PreconditionError);
    cfg = {};
    cfg.tolerance = 0.0;
    CHECK_THROWS_AS(cfg.validate(), wit::PreconditionError);
    CHECK_THROWS_AS(wit::integrate<double>([](double) { return 1.0; }, std::vector<double>{0.0}, 1.0, {}),
                    wit::PreconditionError);
}

TEST_CASE("neg_xlog2x uses 0 log 0 = 0", "[quadrature]") {
    CHECK(wit::neg_xlog2x(0.0) == 0.0);
    CHECK_THAT(wit::neg_xlog2x(0.5), WithinAbs(0.5, 1e-15));
}

TEST_CASE("effective support of a compact wavelet is its support", "[support]") {
    const auto s = wit::effective_support(wit::haar_wavelet(), 0.9999);
    CHECK(s.time.lo == 0.0);
    CHECK(s.time.hi == 2.0);
}

TEST_CASE("effective support of cmor matches the cumulative-energy oracle", "[support]") {
    // |psi_cmor|^2 is (up to a 1e-6 correction) a Gaussian with variance 1/2,
    // so the symmetric interval holding p of the energy is [-r, r], erf(r) = p.
    auto radius = [](double p) {
        double lo = 0.0, hi = 10.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (std::erf(mid) >= p ? hi : lo) = mid;
        }
        return hi;
    };
    const auto s = wit::effective_support(wit::complex_morlet(), 0.9999);
    CHECK_THAT(s.time.lo, WithinAbs(-radius(0.9999), 2e-3));
    CHECK_THAT(s.time.hi, WithinAbs(radius(0.9999), 2e-3));
    CHECK_THAT(s.frequency.center(), WithinAbs(5.0, 1e-4));
    CHECK_THAT(s.frequency.length(), WithinAbs(2.0 * radius(0.9999), 4e-3));
}

TEST_CASE("effective support rejects fractions outside (0, 1)", "[support]") {
    const auto w = wit::complex_morlet();
    CHECK_THROWS_AS(wit::effective_support(w, 1.0), wit::PreconditionError);
    CHECK_THROWS_AS(wit::effective_support(w, 0.0), wit::PreconditionError);
}

TEST_CASE("unreachable fractions are reported", "[support]") {
    // The Haar spectrum decays like 1/w^2: 1 - 1e-8 needs a window of ~1e8 rad/s.
    CHECK_THROWS_AS(wit::effective_interval(wit::haar_wavelet(), wit::Domain::frequency, 1.0 - 1e-8),
                    wit::ConvergenceError);
}

TEST_CASE("integration window honours half-width overrides", "[support]") {
    wit::QuadratureConfig cfg;
    cfg.time_half_width = 3.0;
    const auto win = wit::integration_window(wit::gauss1_wavelet(), wit::Domain::time, cfg);
    CHECK(win.lo == -3.0);
    CHECK(win.hi == 3.0);
    // Compact supports ignore the override.
    const auto haar = wit::integration_window(wit::haar_wavelet(), wit::Domain::time, cfg);
    CHECK(haar.hi == 2.0);
}
