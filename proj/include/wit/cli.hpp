#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wit/catalog.hpp"
#include "wit/cwt.hpp"
#include "wit/divergence.hpp"
#include "wit/dwt.hpp"
#include "wit/entropy.hpp"
#include "wit/error.hpp"
#include "wit/infotheory.hpp"
#include "wit/reference_tables.hpp"
#include "wit/signal_io.hpp"

namespace wit::cli {

enum class Command { catalog, entropy, mra_entropy, distance, mra_info, cwt_mi, rank };
enum class OutputFormat { table, csv, json };

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_computation = 2;

/// A command line that parsed but names something that does not exist.
class UsageError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Command command = Command::catalog;
    OutputFormat format = OutputFormat::table;
    std::vector<std::string> wavelets;
    std::string from;
    std::string to;
    std::string signal;
    int levels = 1;
    std::string domain = "global";
    std::string variant;
    std::optional<double> fraction;
    std::optional<int> quad_points;
    bool compare_reference = false;
    std::string joint_csv;
    std::string grid = "recommended";
    int density = 1;
    double min_coverage = default_min_coverage;
    unsigned threads = 0;

    QuadratureConfig quadrature() const {
        QuadratureConfig q;
        if (quad_points) q.points = *quad_points;
        return q;
    }
};

namespace detail {

using ojson = nlohmann::ordered_json;

/// %.6g, with -0 folded into 0 and infinities spelled out.
inline std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s = buf;
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

/// JSON has no infinity; non-finite values become null.
inline ojson jnum(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

struct Report {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void print_table(std::ostream& out, const Report& r) {
    std::vector<std::size_t> width(r.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(r.header);
    for (const auto& row : r.rows) widen(row);
    auto line = [&](const std::vector<std::string>& row) {
        std::string s;
        for (std::size_t i = 0; i < row.size(); ++i) {
            s += row[i];
            if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
        }
        out << s << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline void print_csv(std::ostream& out, const Report& r) {
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
        out << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
}

inline void emit(std::ostream& out, OutputFormat f, const Report& r, const ojson& j) {
    switch (f) {
        case OutputFormat::table: print_table(out, r); break;
        case OutputFormat::csv: print_csv(out, r); break;
        case OutputFormat::json: out << j.dump(2) << '\n'; break;
    }
}

/// A signal file, or one of the bundled vectors x1, dc16, x3 when no such file exists.
inline SampledSignal resolve_signal(const std::string& spec) {
    if (std::filesystem::exists(spec)) return ingest_signal(spec);
    if (spec == "x1") return SampledSignal(reference_x1(), "x1");
    if (spec == "dc16") return SampledSignal(reference_dc16(), "dc16");
    if (spec == "x3") return SampledSignal(reference_x3(), "x3");
    throw PreconditionError("cannot open signal file '" + spec + "' (bundled signals: x1, dc16, x3)");
}

inline std::vector<std::string> filters_or_all(const std::vector<std::string>& names) {
    return names.empty() ? filter_names() : names;
}

inline MraVariant parse_variant(const std::string& v) {
    return v == "eq27" || v == "eq27_literal" ? MraVariant::eq27_literal : MraVariant::subband_primary;
}

inline void validate(const RunConfig& c) {
    auto known_wavelet = [](const std::string& n) {
        for (const auto& k : catalog_names())
            if (k == n) return;
        find_wavelet(n);  // throws UnknownNameError with the list
    };
    switch (c.command) {
        case Command::entropy:
            if (c.wavelets.empty()) throw UsageError("entropy needs --wavelet");
            for (const auto& w : c.wavelets) known_wavelet(w);
            break;
        case Command::distance:
            known_wavelet(c.from);
            known_wavelet(c.to);
            break;
        case Command::mra_entropy:
        case Command::mra_info:
        case Command::rank:
            for (const auto& w : c.wavelets) load_filter(w);
            break;
        case Command::cwt_mi:
            for (const auto& w : c.wavelets) known_wavelet(w);
            if (c.wavelets.size() > 1) throw UsageError("cwt-mi takes one --wavelet");
            break;
        case Command::catalog: break;
    }
    if (c.command == Command::mra_info && !c.joint_csv.empty() && filters_or_all(c.wavelets).size() != 1)
        throw UsageError("--joint-csv needs exactly one --wavelet");
}

inline void run_catalog(const RunConfig& c, std::ostream& out) {
    Report r{{"name", "kind", "family", "taps", "complex", "note"}, {}};
    ojson j = ojson::array();
    for (const auto& e : list_catalog()) {
        const bool filter = e.kind == CatalogKind::filter;
        r.rows.push_back({e.name, filter ? "filter" : "analytic", e.family, filter ? std::to_string(e.taps) : "-",
                          e.is_complex ? "yes" : "no", e.note});
        ojson o{{"name", e.name}, {"kind", filter ? "filter" : "analytic"}, {"family", e.family}};
        if (filter) o["taps"] = e.taps;
        o["complex"] = e.is_complex;
        if (!e.note.empty()) o["note"] = e.note;
        j.push_back(o);
    }
    emit(out, c.format, r, j);
}

inline void run_entropy(const RunConfig& c, std::ostream& out) {
    const auto q = c.quadrature();
    Report r{{"wavelet", "domain", "bits", "estimated_error", "note"}, {}};
    ojson j = ojson::array();
    auto add = [&](const std::string& name, const EntropyResult& e) {
        r.rows.push_back({name, to_string(e.domain), num(e.value), num(e.estimated_error), e.note});
        ojson o{{"wavelet", name}, {"domain", to_string(e.domain)}, {"bits", jnum(e.value)},
                {"estimated_error", jnum(e.estimated_error)}};
        if (!e.note.empty()) o["note"] = e.note;
        j.push_back(o);
    };
    for (const auto& name : c.wavelets) {
        const auto w = find_wavelet(name);
        if (c.domain == "time") {
            add(name, time_entropy(w, q));
        } else if (c.domain == "frequency") {
            add(name, frequency_entropy(w, q));
        } else if (c.domain == "global") {
            add(name, global_entropy(w, q));
        } else {
            const auto t = time_entropy(w, q);
            const auto f = frequency_entropy(w, q);
            add(name, t);
            add(name, f);
            add(name, {t.value + f.value, t.estimated_error + f.estimated_error, EntropyDomain::global, f.note});
        }
    }
    emit(out, c.format, r, j);
}

inline void run_mra_entropy(const RunConfig& c, std::ostream& out) {
    Report r{{"wavelet", "taps", "highpass_bits", "lowpass_bits"}, {}};
    ojson j = ojson::array();
    for (const auto& name : filters_or_all(c.wavelets)) {
        const auto p = load_filter(name);
        const double g = mra_entropy(p, FilterBranch::highpass);
        const double h = mra_entropy(p, FilterBranch::lowpass);
        r.rows.push_back({name, std::to_string(p.length()), num(g), num(h)});
        j.push_back(ojson{{"wavelet", name}, {"taps", p.length()}, {"highpass_bits", g}, {"lowpass_bits", h}});
    }
    emit(out, c.format, r, j);
}

inline void run_distance(const RunConfig& c, std::ostream& out) {
    const auto q = c.quadrature();
    const double fraction = c.fraction.value_or(default_divergence_fraction);
    const auto w1 = find_wavelet(c.from);
    const auto w2 = find_wavelet(c.to);
    DistanceResult d;
    if (c.variant == "D2") d = kl_distance_full(w1, w2, q, fraction);
    else if (c.variant == "normalized") d = kl_distance_normalized(w1, w2, q, fraction);
    else d = kl_distance_time(w1, w2, q, fraction);
    Report r{{"from", "to", "variant", "bits", "estimated_error", "lambda", "mu"},
             {{c.from, c.to, to_string(d.variant), num(d.value), num(d.estimated_error), num(d.lambda), num(d.mu)}}};
    ojson j{{"from", c.from}, {"to", c.to}, {"variant", to_string(d.variant)}, {"bits", jnum(d.value)},
            {"infinite", std::isinf(d.value)}, {"estimated_error", jnum(d.estimated_error)},
            {"lambda", d.lambda}, {"mu", d.mu}, {"support_fraction", fraction}};
    emit(out, c.format, r, j);
}

/// Splits a printed "bits (percent)" cell.
inline std::pair<std::string, std::string> split_published(const std::string& cell) {
    const auto open = cell.find(" (");
    if (open == std::string::npos) return {cell, ""};
    return {cell.substr(0, open), cell.substr(open + 2, cell.size() - open - 3)};
}

inline void write_mra_joint(const std::string& path, const CoefficientPyramid& pyr, MraVariant v) {
    std::ofstream f(path);
    if (!f) throw PreconditionError("cannot write '" + path + "'");
    const auto d = mra_joint_density(pyr, v);
    f << (v == MraVariant::subband_primary ? "k,subband,mass\n" : "k,level,mass\n");
    for (std::size_t k = 0; k < d.rows; ++k)
        for (std::size_t s = 0; s < d.cols; ++s) {
            std::string label = v == MraVariant::subband_primary ? (s == 0 ? "A" : "D" + std::to_string(s))
                                                                 : std::to_string(s + 1);
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", d.at(k, s));
            f << k << ',' << label << ',' << buf << '\n';
        }
}

inline void run_mra_info(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const SampledSignal sig = resolve_signal(c.signal);
    const int J = c.levels;
    std::vector<MraVariant> variants;
    if (c.compare_reference || c.variant == "both") variants = {MraVariant::subband_primary, MraVariant::eq27_literal};
    else variants = {parse_variant(c.variant)};
    const ReferenceTable* published = c.compare_reference ? find_reference_table(sig.name(), J) : nullptr;

    Report r;
    r.header = {"wave", "variant", "Approx. (%)"};
    for (int l = J; l >= 1; --l) r.header.push_back("Detail " + std::to_string(l) + " (%)");
    r.header.push_back("Total");
    if (c.format == OutputFormat::csv) {
        r.header = {"wavelet", "variant", "approx_bits", "approx_pct"};
        for (int l = J; l >= 1; --l) {
            r.header.push_back("detail" + std::to_string(l) + "_bits");
            r.header.push_back("detail" + std::to_string(l) + "_pct");
        }
        r.header.push_back("total_bits");
    }
    const bool table = c.format == OutputFormat::table;
    auto cell = [&](double bits, double pct, std::vector<std::string>& row) {
        if (table) {
            row.push_back(fixed(bits, 4) + " (" + fixed(pct, 1) + ")");
        } else {
            row.push_back(num(bits));
            row.push_back(fixed(pct, 1));
        }
    };

    ojson reports = ojson::array();
    ojson warnings = ojson::array();
    for (const auto& name : filters_or_all(c.wavelets)) {
        const auto p = load_filter(name);
        const auto pyr = dwt_periodized(sig, p, J);
        for (const auto& w : pyr.warnings) {
            err << "warning: " << name << ": " << w << '\n';
            warnings.push_back(name + ": " + w);
        }
        if (!c.joint_csv.empty()) write_mra_joint(c.joint_csv, pyr, variants.front());
        for (auto v : variants) {
            const auto rep = mra_info_report(pyr, v);
            std::vector<std::string> row{name, to_string(v)};
            cell(rep.approximation, rep.approximation_percent(), row);
            ojson details = ojson::array();
            for (int l = J; l >= 1; --l) {
                cell(rep.details[static_cast<std::size_t>(l - 1)], rep.detail_percent(l), row);
                details.push_back(ojson{{"level", l},
                                        {"bits", rep.details[static_cast<std::size_t>(l - 1)]},
                                        {"percent", rep.detail_percent(l)}});
            }
            row.push_back(table ? fixed(rep.total, 4) : num(rep.total));
            r.rows.push_back(std::move(row));
            reports.push_back(ojson{{"wavelet", name},
                                    {"variant", to_string(v)},
                                    {"approximation", {{"bits", rep.approximation}, {"percent", rep.approximation_percent()}}},
                                    {"details", details},
                                    {"total", rep.total}});
        }
        if (!published) continue;
        for (const auto& pr : reference_rows(*published, name)) {
            std::vector<std::string> row{name, "published"};
            for (const auto& s : pr.cells) {
                if (table) {
                    row.push_back(s.empty() ? "-" : s);
                } else {
                    const auto [b, pct] = split_published(s);
                    row.push_back(b);
                    row.push_back(pct);
                }
            }
            row.push_back(pr.total.empty() ? (table ? "-" : "") : pr.total);
            r.rows.push_back(std::move(row));
        }
    }

    ojson j{{"signal", sig.name()}, {"length", sig.size()}, {"energy", sig.energy()}, {"levels", J},
            {"reports", reports}};
    if (c.compare_reference) {
        ojson pub = ojson::array();
        if (published)
            for (const auto& pr : published->rows) pub.push_back(ojson{{"wavelet", pr.wavelet}, {"cells", pr.cells}, {"total", pr.total}});
        j["published"] = pub;
    }
    if (!warnings.empty()) j["warnings"] = warnings;
    if (table)
        out << "signal " << sig.name() << " (N=" << sig.size() << ", E=" << num(sig.energy()) << "), " << J
            << "-level periodized MRA, information in bits (percent of total)\n";
    emit(out, c.format, r, j);
    if (table && c.compare_reference && !published)
        out << "no published table for signal '" << sig.name() << "' at " << J << " levels\n";
}

inline void write_cwt_joint(const std::string& path, const Scalogram& s, const JointDensity& d) {
    std::ofstream f(path);
    if (!f) throw PreconditionError("cannot write '" + path + "'");
    f << "scale,translation,mass\n";
    char buf[96];
    for (std::size_t i = 0; i < d.rows; ++i) {
        if (i) f << '\n';  // gnuplot block separator
        for (std::size_t k = 0; k < d.cols; ++k) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", s.scales[i], s.translations[k], d.at(i, k));
            f << buf;
        }
    }
}

inline void run_cwt_mi(const RunConfig& c, std::ostream& out) {
    const SampledSignal sig = resolve_signal(c.signal);
    const std::string name = c.wavelets.empty() ? "cmor" : c.wavelets.front();
    const auto w = find_wavelet(name);
    const CwtGrid grid = c.grid == "default" ? default_grid(sig.size()) : recommended_grid(w, sig.size(), c.density);
    const auto s = cwt(sig, w, grid, c.threads, c.quadrature());
    const auto d = joint_density_cwt(s);
    if (!c.joint_csv.empty()) write_cwt_joint(c.joint_csv, s, d);
    const double mi = mutual_info_cwt(d, c.min_coverage);
    Report r{{"signal", "wavelet", "scales", "translations", "a_min", "a_max", "c_psi", "coverage", "mi_bits"},
             {{sig.name(), name, std::to_string(s.rows()), std::to_string(s.cols()), num(s.scales.front()),
               num(s.scales.back()), num(s.c_psi), num(d.coverage), num(mi)}}};
    ojson j{{"signal", sig.name()}, {"wavelet", name}, {"grid", c.grid}, {"density", c.density},
            {"scales", s.rows()}, {"translations", s.cols()}, {"a_min", s.scales.front()},
            {"a_max", s.scales.back()}, {"c_psi", s.c_psi}, {"coverage", d.coverage}, {"mi_bits", mi}};
    emit(out, c.format, r, j);
}

inline void run_rank(const RunConfig& c, std::ostream& out) {
    const SampledSignal sig = resolve_signal(c.signal);
    std::vector<OrthogonalFilterPair> filters;
    for (const auto& n : filters_or_all(c.wavelets)) filters.push_back(load_filter(n));
    const auto variant = parse_variant(c.variant);
    const auto ranked = rank_wavelets(sig, filters, c.levels, variant);
    Report r{{"rank", "wavelet", "total_bits"}, {}};
    ojson list = ojson::array();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        r.rows.push_back({std::to_string(i + 1), ranked[i].name,
                          c.format == OutputFormat::table ? fixed(ranked[i].total, 4) : num(ranked[i].total)});
        list.push_back(ojson{{"rank", i + 1}, {"wavelet", ranked[i].name}, {"total_bits", ranked[i].total}});
    }
    ojson j{{"signal", sig.name()}, {"levels", c.levels}, {"variant", to_string(variant)}, {"ranking", list}};
    emit(out, c.format, r, j);
}

}  // namespace detail

/// Executes a validated configuration.
inline void execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    switch (c.command) {
        case Command::catalog: detail::run_catalog(c, out); break;
        case Command::entropy: detail::run_entropy(c, out); break;
        case Command::mra_entropy: detail::run_mra_entropy(c, out); break;
        case Command::distance: detail::run_distance(c, out); break;
        case Command::mra_info: detail::run_mra_info(c, out, err); break;
        case Command::cwt_mi: detail::run_cwt_mi(c, out); break;
        case Command::rank: detail::run_rank(c, out); break;
    }
}

/// Parses `args` (without the program name), runs the command and returns
/// 0 on success, 1 on a usage error, 2 on a computation error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Entropy, distance and mutual-information measures for wavelets and signals", "wit"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "table";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "csv", "json"}));
    int quad_points = 0;
    auto* qp = app.add_option("--quad-points", quad_points, "Quadrature panels per window (env WIT_QUAD_POINTS)")
                   ->check(CLI::Range(64, 1 << 22));

    auto* catalog = app.add_subcommand("catalog", "List built-in filters and analytic wavelets");

    auto* entropy = app.add_subcommand("entropy", "Time, frequency or global entropy of a wavelet");
    entropy->add_option("-w,--wavelet", cfg.wavelets, "Wavelet name (repeatable)")->required();
    entropy->add_option("--domain", cfg.domain, "time, frequency, global or all")
        ->check(CLI::IsMember({"time", "frequency", "global", "all"}));

    auto* mra_ent = app.add_subcommand("mra-entropy", "Entropy of the squared filter taps");
    mra_ent->add_option("-w,--wavelet", cfg.wavelets, "Filter name (repeatable; default all)");

    auto* distance = app.add_subcommand("distance", "Distance between two wavelets");
    distance->add_option("--from", cfg.from, "First wavelet")->required();
    distance->add_option("--to", cfg.to, "Second wavelet")->required();
    cfg.variant = "D1";
    distance->add_option("--variant", cfg.variant, "D1, D2 or normalized")
        ->check(CLI::IsMember({"D1", "D2", "normalized"}));
    distance->add_option("--fraction", cfg.fraction, "Energy fraction of the effective supports")
        ->check(CLI::Range(0.5, 1.0 - 1e-15));

    auto* mra = app.add_subcommand("mra-info", "Per-subband mutual information of an MRA");
    mra->add_option("-s,--signal", cfg.signal, "CSV/JSON signal file, or x1, dc16, x3")->required();
    mra->add_option("-w,--wavelet", cfg.wavelets, "Filter name (repeatable; default all)");
    mra->add_option("-J,--levels", cfg.levels, "Decomposition levels")->check(CLI::Range(1, 30));
    std::string mra_variant = "subband";
    mra->add_option("--variant", mra_variant, "subband, eq27 or both")->check(CLI::IsMember({"subband", "eq27", "both"}));
    mra->add_flag("--compare-reference", cfg.compare_reference, "Show both variants next to the published values");
    mra->add_option("--joint-csv", cfg.joint_csv, "Write the joint density as CSV");

    auto* cwtmi = app.add_subcommand("cwt-mi", "Mutual information of a CWT joint density");
    cwtmi->add_option("-s,--signal", cfg.signal, "CSV/JSON signal file, or x1, dc16, x3")->required();
    cwtmi->add_option("-w,--wavelet", cfg.wavelets, "Wavelet name (default cmor)");
    cwtmi->add_option("--grid", cfg.grid, "recommended or default")->check(CLI::IsMember({"recommended", "default"}));
    cwtmi->add_option("--density", cfg.density, "Grid refinement factor")->check(CLI::Range(1, 16));
    cwtmi->add_option("--min-coverage", cfg.min_coverage, "Minimum captured mass")->check(CLI::Range(0.0, 1.0));
    cwtmi->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    cwtmi->add_option("--joint-csv", cfg.joint_csv, "Write the joint density as CSV");

    auto* rank = app.add_subcommand("rank", "Rank filters by MRA information");
    rank->add_option("-s,--signal", cfg.signal, "CSV/JSON signal file, or x1, dc16, x3")->required();
    rank->add_option("-w,--wavelet", cfg.wavelets, "Filter name (repeatable; default all)");
    rank->add_option("-J,--levels", cfg.levels, "Decomposition levels")->check(CLI::Range(1, 30));
    std::string rank_variant = "subband";
    rank->add_option("--variant", rank_variant, "subband or eq27")->check(CLI::IsMember({"subband", "eq27"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
    }

    if (const char* env = std::getenv("WIT_QUAD_POINTS"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 64 || v > (1 << 22)) {
            err << "error: WIT_QUAD_POINTS must be an integer in [64, 4194304]\n";
            return exit_usage;
        }
        cfg.quad_points = static_cast<int>(v);
    }
    if (qp->count() > 0) cfg.quad_points = quad_points;
    cfg.format = format == "csv" ? OutputFormat::csv : format == "json" ? OutputFormat::json : OutputFormat::table;

    if (catalog->parsed()) cfg.command = Command::catalog;
    else if (entropy->parsed()) cfg.command = Command::entropy;
    else if (mra_ent->parsed()) cfg.command = Command::mra_entropy;
    else if (distance->parsed()) cfg.command = Command::distance;
    else if (mra->parsed()) cfg.command = Command::mra_info, cfg.variant = mra_variant;
    else if (cwtmi->parsed()) cfg.command = Command::cwt_mi;
    else if (rank->parsed()) cfg.command = Command::rank, cfg.variant = rank_variant;

    try {
        detail::validate(cfg);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    try {
        execute(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_computation;
    }
    return exit_ok;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace wit::cli
