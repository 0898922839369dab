#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "wit/analytic.hpp"
#include "wit/cascade.hpp"
#include "wit/error.hpp"
#include "wit/filter_bank.hpp"

namespace wit {

namespace detail {

struct EmbeddedFilter {
    const char* name;
    const char* text;
};

inline constexpr EmbeddedFilter embedded_filters[] = {
#include "wit/builtin_filter_data.inc"
};

struct AnalyticEntry {
    const char* name;
    const char* family;
    AnalyticWavelet (*make)();
};

inline AnalyticWavelet make_cmor() { return complex_morlet(); }
inline AnalyticWavelet make_morlet() { return real_morlet(); }

inline const std::vector<AnalyticEntry>& analytic_entries() {
    static const std::vector<AnalyticEntry> entries{
        {"haar", "Haar", &haar_wavelet},
        {"morlet", "real Morlet", &make_morlet},
        {"cmor", "complex Morlet", &make_cmor},
        {"gauss1", "Gaussian derivative", &gauss1_wavelet},
        {"mexh", "Mexican hat", &mexican_hat},
    };
    return entries;
}

inline const char* embedded_text(std::string_view name) {
    for (const auto& f : embedded_filters)
        if (name == f.name) return f.text;
    return nullptr;
}

inline std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : ", ") + n;
    return out;
}

}  // namespace detail

enum class CatalogKind { filter, analytic };

struct CatalogEntry {
    std::string name;
    CatalogKind kind = CatalogKind::filter;
    std::string family;
    std::size_t taps = 0;  ///< filter length; 0 for analytic wavelets
    bool is_complex = false;
    std::string note;
};

/// Built-in filter names in table order: Daubechies, Coiflets, Symmlets.
inline std::vector<std::string> filter_names() {
    static const std::vector<std::string> order{"db1", "db2", "db3", "db4", "db5", "coif2", "coif3", "sym1", "sym2"};
    std::vector<std::string> out;
    for (const auto& n : order)
        if (detail::embedded_text(n)) out.push_back(n);
    // Filter files added to data/filters without a fixed slot go last, alphabetically.
    for (const auto& f : detail::embedded_filters)
        if (std::find(out.begin(), out.end(), f.name) == out.end()) out.emplace_back(f.name);
    return out;
}

inline std::vector<std::string> analytic_names() {
    std::vector<std::string> out;
    for (const auto& e : detail::analytic_entries()) out.emplace_back(e.name);
    return out;
}

inline std::vector<std::string> catalog_names() {
    auto out = filter_names();
    for (auto& n : analytic_names()) out.push_back(std::move(n));
    return out;
}

inline OrthogonalFilterPair load_filter(std::string_view name) {
    const char* text = detail::embedded_text(name);
    if (!text)
        throw UnknownNameError("unknown filter '" + std::string(name) + "'; available: " +
                               detail::join(filter_names()));
    return parse_filter_text(std::string(name), text);
}

inline bool is_analytic_name(std::string_view name) {
    const auto& e = detail::analytic_entries();
    return std::any_of(e.begin(), e.end(), [&](const auto& a) { return name == a.name; });
}

inline AnalyticWavelet analytic_wavelet(std::string_view name) {
    for (const auto& e : detail::analytic_entries())
        if (name == e.name) return e.make();
    throw UnknownNameError("unknown analytic wavelet '" + std::string(name) + "'; available: " +
                           detail::join(analytic_names()));
}

/// A continuous wavelet by name: analytic entries first, then the cascade
/// wavelet of a built-in filter. Cascade tables are built once per filter.
inline AnalyticWavelet find_wavelet(std::string_view name) {
    if (is_analytic_name(name)) return analytic_wavelet(name);
    if (!detail::embedded_text(name))
        throw UnknownNameError("unknown wavelet '" + std::string(name) + "'; available: " +
                               detail::join(catalog_names()));
    static std::mutex mutex;
    static std::map<std::string, AnalyticWavelet, std::less<>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(std::string(name), cascade_wavelet(load_filter(name))).first;
    return it->second;
}

inline std::vector<CatalogEntry> list_catalog() {
    std::vector<CatalogEntry> out;
    std::vector<OrthogonalFilterPair> seen;
    for (const auto& n : filter_names()) {
        const auto p = load_filter(n);
        CatalogEntry e{n, CatalogKind::filter, "", p.length(), false, ""};
        if (n.starts_with("db")) e.family = "Daubechies";
        else if (n.starts_with("coif")) e.family = "Coiflet";
        else if (n.starts_with("sym")) e.family = "Symmlet";
        else e.family = "user";
        if (n == "db1") e.note = "Haar filter pair";
        for (const auto& q : seen)
            if (q.h == p.h) {
                e.note = "taps equal " + q.name;
                if (q.name == "db1") e.note += " (Haar)";
                break;
            }
        seen.push_back(p);
        out.push_back(std::move(e));
    }
    for (const auto& a : detail::analytic_entries()) {
        const auto w = a.make();
        out.push_back({a.name, CatalogKind::analytic, a.family, 0, w.is_complex(), ""});
    }
    return out;
}

}  // namespace wit
