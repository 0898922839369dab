#include <algorithm>
#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "wit/catalog.hpp"
#include "wit/wavelet.hpp"

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("catalog lists filters and analytic wavelets", "[catalog]") {
    const auto names = wit::catalog_names();
    CHECK(has(names, "db1"));
    CHECK(has(names, "cmor"));
    for (const char* n : {"db1", "db2", "db3", "db4", "db5", "coif2", "coif3", "sym1", "sym2"})
        CHECK(has(wit::filter_names(), n));
    for (const char* n : {"haar", "morlet", "cmor", "gauss1", "mexh"}) CHECK(has(wit::analytic_names(), n));
}

TEST_CASE("duplicate tap sets are annotated", "[catalog]") {
    for (const auto& e : wit::list_catalog()) {
        if (e.name == "sym1") CHECK_THAT(e.note, ContainsSubstring("taps equal db1"));
        if (e.name == "sym2") CHECK_THAT(e.note, ContainsSubstring("taps equal db2"));
        if (e.name == "cmor") CHECK(e.is_complex);
        if (e.name == "db3") CHECK(e.taps == 6);
    }
    CHECK(wit::load_filter("sym1").h == wit::load_filter("db1").h);
}

TEST_CASE("every built-in filter is orthogonal", "[catalog]") {
    for (const auto& n : wit::filter_names()) {
        INFO(n);
        const auto p = wit::load_filter(n);
        CHECK(wit::validate_filter(p).passed());
        CHECK(p.length() % 2 == 0);
    }
}

TEST_CASE("db1 is the Haar pair", "[catalog]") {
    const auto p = wit::load_filter("db1");
    const double r = 1.0 / std::numbers::sqrt2;
    REQUIRE(p.length() == 2);
    CHECK_THAT(p.h[0], WithinAbs(r, 1e-16));
    CHECK_THAT(p.h[1], WithinAbs(r, 1e-16));
    CHECK_THAT(p.g[0], WithinAbs(r, 1e-16));
    CHECK_THAT(p.g[1], WithinAbs(-r, 1e-16));
    CHECK(wit::validate_filter(p).worst() < 1e-15);
}

TEST_CASE("db2 against the double-shift orthogonality oracle", "[catalog]") {
    const auto p = wit::load_filter("db2");
    REQUIRE(p.length() == 4);
    // Closed-form Daubechies-4 taps.
    const double s3 = std::sqrt(3.0);
    const double d = 4.0 * std::numbers::sqrt2;
    const double expected[4] = {(1 + s3) / d, (3 + s3) / d, (3 - s3) / d, (1 - s3) / d};
    double energy = 0.0;
    for (int k = 0; k < 4; ++k) {
        CHECK_THAT(p.h[k], WithinAbs(expected[k], 1e-15));
        energy += p.h[k] * p.h[k];
    }
    CHECK_THAT(energy, WithinAbs(1.0, 1e-12));
    CHECK_THAT(p.h[0] * p.h[2] + p.h[1] * p.h[3], WithinAbs(0.0, 1e-15));
}

TEST_CASE("unknown names are rejected with the list of names", "[catalog]") {
    CHECK_THROWS_AS(wit::load_filter("db99"), wit::UnknownNameError);
    CHECK_THROWS_WITH(wit::find_wavelet("db99"), ContainsSubstring("coif3"));
}

TEST_CASE("validate_filter detects a scaled filter", "[catalog]") {
    auto p = wit::load_filter("db3");
    CHECK(wit::validate_filter(p).passed());
    for (double& v : p.h) v *= 1.01;
    const auto r = wit::validate_filter(p);
    CHECK_FALSE(r.passed());
    CHECK_THAT(r.lowpass_energy, WithinAbs(0.0201, 1e-12));
}

TEST_CASE("filter text parsing", "[catalog]") {
    const auto p = wit::parse_filter_text("pair", "# comment\n0.7071067811865476\n\n0.7071067811865476  # tail\n");
    CHECK(p.length() == 2);
    CHECK_THROWS_AS(wit::parse_filter_text("bad", "0.5\nabc\n"), wit::ParseError);
    try {
        wit::parse_filter_text("bad", "0.5\n0.5\nabc\n");
    } catch (const wit::ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(wit::parse_filter_text("odd", "1\n"), wit::PreconditionError);
    const auto file = wit::load_filter_file(std::string(WIT_DATA_DIR) + "/filters/coif2.txt");
    CHECK(file.name == "coif2");
    CHECK(file.h == wit::load_filter("coif2").h);
}

TEST_CASE("point evaluation", "[wavelet]") {
    const auto haar = wit::find_wavelet("haar");
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK_THAT(wit::evaluate_wavelet(haar, 0.25).real(), WithinAbs(r, 1e-15));
    CHECK_THAT(wit::evaluate_wavelet(haar, 0.75).real(), WithinAbs(r, 1e-15));
    CHECK_THAT(wit::evaluate_wavelet(haar, 1.25).real(), WithinAbs(-r, 1e-15));
    CHECK(wit::evaluate_wavelet(haar, 2.0).real() == 0.0);
    const auto d = wit::daughter(haar, 2.0, 0.0);
    CHECK_THAT(wit::evaluate_wavelet(d, 0.5).real(), WithinAbs(haar.time(0.25).real() / std::numbers::sqrt2, 1e-16));
    // The db1 cascade wavelet is the classical [0, 1) Haar.
    const auto db1 = wit::find_wavelet("db1");
    CHECK_THAT(db1.time(0.25).real(), WithinAbs(1.0, 1e-14));
    CHECK_THAT(db1.time(0.75).real(), WithinAbs(-1.0, 1e-14));
    CHECK(db1.time(1.5).real() == 0.0);
    CHECK_THROWS_AS(wit::daughter(haar, 0.0, 0.0), wit::PreconditionError);
}

TEST_CASE("spectra", "[wavelet]") {
    CHECK(std::abs(wit::wavelet_spectrum(wit::find_wavelet("gauss1"), 0.0)) == 0.0);

    const auto cmor = wit::find_wavelet("cmor");
    double best = 0.0, arg = 0.0;
    for (double w = 0.0; w <= 10.0; w += 1e-3)
        if (std::abs(cmor.spectrum(w)) > best) best = std::abs(cmor.spectrum(w)), arg = w;
    CHECK_THAT(arg, WithinAbs(5.0, 2e-3));

    const auto d = wit::daughter(cmor, 2.0, 0.0);
    for (double w : {-1.0, 0.7, 2.5, 3.0})
        CHECK(std::abs(d.spectrum(w) - std::numbers::sqrt2 * cmor.spectrum(2.0 * w)) < 1e-14);

    const auto haar = wit::find_wavelet("haar");
    for (double w : {-7.0, -0.3, 0.01, 1.0, 4.0, 40.0}) CHECK(std::abs(haar.spectrum(w) - oracle::haar_spectrum(w)) < 1e-13);
}

TEST_CASE("cascade spectrum equals the transform of the tabulated step function", "[cascade]") {
    for (const char* name : {"db2", "coif2", "db5"}) {
        INFO(name);
        const auto t = wit::make_cascade_table(wit::load_filter(name));
        double energy = 0.0, mean = 0.0;
        for (double v : t.values) energy += v * v * t.step, mean += v * t.step;
        CHECK_THAT(energy, WithinAbs(1.0, 1e-10));
        CHECK_THAT(mean, WithinAbs(0.0, 1e-10));
        for (double w : {0.3, 1.7, 5.0, 23.0, 311.0}) {
            // Sum over cells of v_m int e^{-jwt} dt.
            std::complex<double> direct{};
            const std::complex<double> cell = (1.0 - std::polar(1.0, -w * t.step)) / std::complex<double>(0.0, w);
            for (std::size_t m = 0; m < t.values.size(); ++m)
                direct += t.values[m] * std::polar(1.0, -w * static_cast<double>(m) * t.step) * cell;
            CHECK(std::abs(t.spectrum(w) - direct) < 1e-10);
        }
    }
}
