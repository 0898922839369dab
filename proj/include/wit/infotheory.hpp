#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <future>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wit/cwt.hpp"
#include "wit/dwt.hpp"
#include "wit/error.hpp"
#include "wit/filter_bank.hpp"
#include "wit/signal.hpp"

namespace wit {

enum class JointKind { cwt_grid, dyadic_grid, mra_subband };

inline const char* to_string(JointKind k) {
    switch (k) {
        case JointKind::cwt_grid: return "cwt_grid";
        case JointKind::dyadic_grid: return "dyadic_grid";
        case JointKind::mra_subband: return "mra_subband";
    }
    return "?";
}

/// Probability masses on a rows x cols grid with cached marginals.
///
/// For CWT grids the masses are density times cell measure and need not sum
/// to one: `coverage` is their total before any renormalization.
struct JointDensity {
    JointKind kind = JointKind::mra_subband;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> cells;  ///< row-major
    std::vector<double> row_marginals;
    std::vector<double> col_marginals;
    double coverage = 0.0;

    double at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }

    JointDensity() = default;

    JointDensity(JointKind k, std::size_t r, std::size_t c, std::vector<double> masses)
        : kind(k), rows(r), cols(c), cells(std::move(masses)) {
        if (cells.size() != rows * cols) throw PreconditionError("joint density: cell count does not match shape");
        row_marginals.assign(rows, 0.0);
        col_marginals.assign(cols, 0.0);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const double p = at(i, j);
                if (!(p >= 0.0) || !std::isfinite(p)) throw PreconditionError("joint density: masses must be finite and >= 0");
                row_marginals[i] += p;
                col_marginals[j] += p;
            }
        for (double r : row_marginals) coverage += r;
    }
};

/// Per-cell terms p log2(p / (p_row p_col)) of the (renormalized) joint.
inline std::vector<double> information_terms(const JointDensity& d) {
    std::vector<double> terms(d.cells.size(), 0.0);
    const double total = d.coverage;
    if (!(total > 0.0)) return terms;
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) {
            const double p = d.at(i, j);
            if (p <= 0.0) continue;
            terms[i * d.cols + j] = (p / total) * std::log2(p * total / (d.row_marginals[i] * d.col_marginals[j]));
        }
    return terms;
}

/// Mutual information in bits between the row and column variables.
inline double mutual_information(const JointDensity& d) {
    double mi = 0.0;
    for (double t : information_terms(d)) mi += t;
    return mi;
}

/// Sum of the information terms in each column.
inline std::vector<double> column_information(const JointDensity& d) {
    const auto terms = information_terms(d);
    std::vector<double> out(d.cols, 0.0);
    for (std::size_t i = 0; i < d.rows; ++i)
        for (std::size_t j = 0; j < d.cols; ++j) out[j] += terms[i * d.cols + j];
    return out;
}

/// Joint density over positive scales: 2 |CWT|^2 / (E c_psi a^2) da db.
/// The factor 2 folds in the mirror half-plane a < 0, which carries the same
/// mass for real signals.
inline JointDensity joint_density_cwt(const Scalogram& s) {
    if (!(s.energy > 0.0)) throw PreconditionError("joint density needs a signal with positive energy");
    if (!(s.c_psi > 0.0) || !std::isfinite(s.c_psi)) throw PreconditionError("joint density needs a finite c_psi > 0");
    const auto da = cell_widths(s.scales, true);
    const auto db = cell_widths(s.translations, false);
    std::vector<double> cells(s.rows() * s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        const double a = s.scales[i];
        const double weight = 2.0 * da[i] / (s.energy * s.c_psi * a * a);
        for (std::size_t j = 0; j < s.cols(); ++j) cells[i * s.cols() + j] = std::norm(s.at(i, j)) * weight * db[j];
    }
    return JointDensity(JointKind::cwt_grid, s.rows(), s.cols(), std::move(cells));
}

/// Default minimum fraction of the joint mass a CWT grid must capture.
inline constexpr double default_min_coverage = 0.85;

/// MI of a CWT joint after renormalizing the captured mass to one.
inline double mutual_info_cwt(const JointDensity& d, double min_coverage = default_min_coverage) {
    if (d.kind != JointKind::cwt_grid) throw PreconditionError("mutual_info_cwt expects a cwt_grid density");
    if (d.coverage < min_coverage)
        throw CoverageError("CWT grid captures " + std::to_string(d.coverage) + " of the mass (minimum " +
                            std::to_string(min_coverage) + "); widen the scale and translation ranges");
    return mutual_information(d);
}

/// Joint density of homogeneous (dyadic) coefficients w_{n,m}: |w|^2 / sum |w|^2.
inline JointDensity joint_density_dyadic(const std::map<std::pair<int, int>, double>& coeffs) {
    if (coeffs.empty()) throw PreconditionError("dyadic coefficient set is empty");
    std::map<int, std::size_t> row_index;
    std::map<int, std::size_t> col_index;
    for (const auto& [key, w] : coeffs) {
        row_index.emplace(key.first, 0);
        col_index.emplace(key.second, 0);
    }
    std::size_t r = 0;
    for (auto& [k, v] : row_index) v = r++;
    std::size_t c = 0;
    for (auto& [k, v] : col_index) v = c++;
    double energy = 0.0;
    for (const auto& [key, w] : coeffs) energy += w * w;
    if (!(energy > 0.0)) throw PreconditionError("dyadic coefficients have zero energy");
    std::vector<double> cells(r * c, 0.0);
    for (const auto& [key, w] : coeffs) cells[row_index[key.first] * c + col_index[key.second]] = w * w / energy;
    return JointDensity(JointKind::dyadic_grid, r, c, std::move(cells));
}

inline double mutual_info_dyadic(const std::map<std::pair<int, int>, double>& coeffs) {
    return mutual_information(joint_density_dyadic(coeffs));
}

enum class MraVariant { subband_primary, eq27_literal };

inline const char* to_string(MraVariant v) { return v == MraVariant::subband_primary ? "subband_primary" : "eq27_literal"; }

/// Joint density of an MRA pyramid.
///
/// subband_primary: outcomes (k, s), s in {A, D_1..D_J}, mass |c_k|^2 / E,
/// with k the raw coefficient index in its own subband (column 0 is A,
/// column j is D_j). eq27_literal: outcomes (k, j), j = 1..J, mass
/// (|v_{k,J}|^2 / J + |w_{k,j}|^2) / E.
inline JointDensity mra_joint_density(const CoefficientPyramid& c, MraVariant variant = MraVariant::subband_primary) {
    const double energy = c.energy();
    if (!(energy > 0.0)) throw PreconditionError("MRA joint density needs a pyramid with positive energy");
    const auto levels = static_cast<std::size_t>(c.levels);
    std::size_t rows = c.approx.size();
    for (const auto& d : c.details) rows = std::max(rows, d.size());
    auto sq = [](const std::vector<double>& v, std::size_t k) { return k < v.size() ? v[k] * v[k] : 0.0; };
    if (variant == MraVariant::subband_primary) {
        const std::size_t cols = levels + 1;
        std::vector<double> cells(rows * cols, 0.0);
        for (std::size_t k = 0; k < rows; ++k) {
            cells[k * cols] = sq(c.approx, k) / energy;
            for (std::size_t j = 1; j <= levels; ++j) cells[k * cols + j] = sq(c.details[j - 1], k) / energy;
        }
        return JointDensity(JointKind::mra_subband, rows, cols, std::move(cells));
    }
    const double share = 1.0 / static_cast<double>(levels);
    std::vector<double> cells(rows * levels, 0.0);
    for (std::size_t k = 0; k < rows; ++k)
        for (std::size_t j = 1; j <= levels; ++j)
            cells[k * levels + j - 1] = (sq(c.approx, k) * share + sq(c.details[j - 1], k)) / energy;
    return JointDensity(JointKind::mra_subband, rows, levels, std::move(cells));
}

/// Per-subband split of the MRA mutual information.
struct InfoReport {
    std::string wavelet;
    int levels = 0;
    MraVariant variant = MraVariant::subband_primary;
    double approximation = 0.0;
    std::vector<double> details;  ///< details[j - 1] is level j
    double total = 0.0;

    /// Share of the total in percent; 0 when the total vanishes.
    double percent(double part) const { return std::abs(total) < 1e-12 ? 0.0 : 100.0 * part / total; }
    double approximation_percent() const { return percent(approximation); }
    double detail_percent(int level) const { return percent(details.at(static_cast<std::size_t>(level - 1))); }
};

/// Total MI of the pyramid's joint density, split by subband. For the
/// literal variant each cell's term is shared between A and D_j in
/// proportion to the two mass components.
inline InfoReport mra_info_report(const CoefficientPyramid& c, MraVariant variant = MraVariant::subband_primary) {
    const JointDensity d = mra_joint_density(c, variant);
    InfoReport r;
    r.wavelet = c.filter;
    r.levels = c.levels;
    r.variant = variant;
    r.details.assign(static_cast<std::size_t>(c.levels), 0.0);
    const auto terms = information_terms(d);
    if (variant == MraVariant::subband_primary) {
        for (std::size_t k = 0; k < d.rows; ++k) {
            r.approximation += terms[k * d.cols];
            for (std::size_t j = 1; j < d.cols; ++j) r.details[j - 1] += terms[k * d.cols + j];
        }
    } else {
        const double energy = c.energy();
        const double share = 1.0 / static_cast<double>(c.levels);
        for (std::size_t k = 0; k < d.rows; ++k)
            for (std::size_t j = 0; j < d.cols; ++j) {
                const double t = terms[k * d.cols + j];
                if (t == 0.0) continue;
                const double a = k < c.approx.size() ? c.approx[k] * c.approx[k] * share / energy : 0.0;
                const double mass = d.at(k, j);
                r.approximation += t * a / mass;
                r.details[j] += t * (1.0 - a / mass);
            }
    }
    for (double t : terms) r.total += t;
    return r;
}

inline InfoReport mra_info(const SampledSignal& f, const OrthogonalFilterPair& p, int levels,
                           MraVariant variant = MraVariant::subband_primary) {
    return mra_info_report(dwt_periodized(f, p, levels), variant);
}

struct RankEntry {
    std::string name;
    double total = 0.0;
};

/// Filters sorted by decreasing MRA information; equal totals (to 1e-12
/// bits) keep their input order. Filters are evaluated concurrently.
inline std::vector<RankEntry> rank_wavelets(const SampledSignal& f, const std::vector<OrthogonalFilterPair>& filters,
                                            int levels, MraVariant variant = MraVariant::subband_primary) {
    std::vector<std::future<double>> jobs;
    jobs.reserve(filters.size());
    for (const auto& p : filters)
        jobs.push_back(std::async(std::launch::async, [&f, &p, levels, variant] { return mra_info(f, p, levels, variant).total; }));
    std::vector<RankEntry> out;
    for (std::size_t i = 0; i < filters.size(); ++i) out.push_back({filters[i].name, jobs[i].get()});
    std::stable_sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
        return std::llround(a.total * 1e12) > std::llround(b.total * 1e12);
    });
    return out;
}

}  // namespace wit
