// Batch front end: evaluate series, estimate abscissas, run the contour
// inversion, recover coefficients, compute norms and profiles, list the
// catalog, and run the verification suite.
//
// Exit codes: 0 success, 1 validation/parse error, 2 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "riesz/abscissa.hpp"
#include "riesz/catalog.hpp"
#include "riesz/errors.hpp"
#include "riesz/json_io.hpp"
#include "riesz/spaces.hpp"
#include "riesz/transforms.hpp"
#include "riesz/verify.hpp"
#include "riesz/version.hpp"

namespace {

using riesz::cplx;
using riesz::json;

struct Sink {
    std::string path; // empty -> stdout

    void write_text(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (text.empty() || text.back() != '\n') std::cout << '\n';
            return;
        }
        std::ofstream out(path);
        if (!out) riesz::fail(riesz::errc::parse_error, "cannot open output file " + path);
        out << text;
        if (text.empty() || text.back() != '\n') out << '\n';
    }

    bool wants_csv() const {
        return path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    }
};

json artifact_header(const std::string& subcommand, const json& params) {
    json j;
    j["tool"] = riesz::kToolName;
    j["version"] = riesz::kToolVersion;
    j["subcommand"] = subcommand;
    j["parameters"] = params;
    return j;
}

riesz::DirichletSeries load_series(const std::string& catalog_name,
                                   const std::string& series_path) {
    if (!catalog_name.empty()) return riesz::catalog_entry(catalog_name).series;
    std::ifstream in(series_path);
    if (!in) riesz::fail(riesz::errc::parse_error, "cannot read " + series_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        riesz::fail(riesz::errc::parse_error, e.what());
    }
    return riesz::series_from_json(j);
}

// Default sampling horizon per frequency shape: far enough for the standard
// estimates, small enough that term counts stay enumerable.
double default_x_max(const riesz::Frequency& freq) {
    switch (freq.generator()) {
        case riesz::GeneratorKind::log: return std::log(1e6);
        case riesz::GeneratorKind::sqrtlog: return 2.9;
        default: return 400.0;
    }
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    // "lo:hi:n" -> n log-spaced values.
    double lo, hi;
    int n;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3 || n < 2)
        riesz::fail(riesz::errc::parse_error, "grid spec must be lo:hi:n, got " + spec);
    return riesz::log_grid(lo, hi, n);
}

riesz::RieszKind parse_kind(const std::string& kind) {
    if (kind == "first") return riesz::RieszKind::first;
    if (kind == "second") return riesz::RieszKind::second;
    riesz::fail(riesz::errc::parse_error, "kind must be first|second");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riesz summation laboratory for general Dirichlet series"};
    app.require_subcommand(1);

    std::string catalog_name, series_path, out_path, kind_str = "first", s_str = "1+0i";
    std::string mode = "pointwise", grid_sigma = "1e-3:20:40", grid_t = "50:1001";
    std::string profile = "none";
    double k = 1.0, ell = 0.0, x_max = 0.0, x_min = 0.0, tolerance = 1e-6, x_at = 2.5;
    double contour_c = 0.0, truncation_T = 0.0, t_sup = 50.0;
    double growth_bound = 0.0, growth_exponent = 0.0;
    int samples = 48, t_samples = 41, n_max = 5;

    auto add_io = [&](CLI::App* cmd, bool series_ok = true) {
        cmd->add_option("--catalog", catalog_name, "catalog entry name");
        if (series_ok) cmd->add_option("--series", series_path, "series JSON file");
        cmd->add_option("--out", out_path, "output path (.csv selects CSV where supported)");
    };

    auto* eval = app.add_subcommand("eval", "sample Riesz means and estimate the limit");
    add_io(eval);
    eval->add_option("--k", k, "Riesz order");
    eval->add_option("--kind", kind_str, "first|second");
    eval->add_option("--s", s_str, "evaluation point, a+bi");
    eval->add_option("--x-max", x_max, "largest mean parameter");
    eval->add_option("--x-min", x_min, "smallest mean parameter");
    eval->add_option("--samples", samples, "schedule length");
    eval->add_option("--tolerance", tolerance, "tail tolerance");

    auto* absc = app.add_subcommand("abscissa", "Bohr-Cahen style abscissa estimates");
    add_io(absc);
    absc->add_option("--k", k, "Riesz order");
    absc->add_option("--kind", kind_str, "first|second");
    absc->add_option("--mode", mode, "pointwise|uniform|absolute");
    absc->add_option("--x-max", x_max, "largest mean parameter");
    absc->add_option("--samples", samples, "window length");
    absc->add_option("--t-sup", t_sup, "half-width of the imaginary sweep (uniform mode)");
    absc->add_option("--t-samples", t_samples, "imaginary sweep resolution");

    auto* perron = app.add_subcommand("perron", "contour inversion of a catalog limit function");
    add_io(perron, false);
    perron->add_option("--k", k, "Riesz order (k >= 1)");
    perron->add_option("--x", x_at, "summatory cutoff");
    perron->add_option("--contour-c", contour_c, "contour abscissa (default 1/x)");
    perron->add_option("--truncation-T", truncation_T, "contour truncation (default from tolerance)");
    perron->add_option("--tolerance", tolerance, "tail tolerance");
    perron->add_option("--growth-bound", growth_bound, "envelope constant for |f| on the contour");
    perron->add_option("--growth-exponent", growth_exponent, "envelope exponent ell");

    auto* recover = app.add_subcommand("recover", "peel coefficients from a catalog limit");
    add_io(recover, false);
    recover->add_option("--k", k, "Riesz order (k >= 1)");
    recover->add_option("--n-max", n_max, "number of coefficients");
    recover->add_option("--contour-c", contour_c, "contour abscissa");
    recover->add_option("--truncation-T", truncation_T, "contour truncation");
    recover->add_option("--tolerance", tolerance, "tail tolerance");

    auto* norm = app.add_subcommand("norm", "weighted sup-norm and boundary profiles");
    add_io(norm, false);
    norm->add_option("--ell", ell, "growth exponent");
    norm->add_option("--k", k, "Riesz order (ratio profile)");
    norm->add_option("--kind", kind_str, "first|second (ratio profile)");
    norm->add_option("--x-max", x_max, "largest mean parameter (ratio profile)");
    norm->add_option("--grid-sigma", grid_sigma, "sigma grid, lo:hi:n (log-spaced)");
    norm->add_option("--grid-t", grid_t, "t grid, sup:n");
    norm->add_option("--profile", profile, "none|far-left|far-right|ratio");

    auto* cat = app.add_subcommand("catalog", "list catalog entries");
    cat->add_option("--out", out_path, "output path");

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--out", out_path, "output path");

    CLI11_PARSE(app, argc, argv);

    try {
        Sink sink{out_path};

        if (eval->parsed()) {
            auto D = load_series(catalog_name, series_path);
            if (x_max <= 0.0) x_max = default_x_max(D.frequency());
            if (x_min <= 0.0) x_min = x_max / 100.0;
            const cplx s = riesz::parse_complex(s_str);
            auto sched = riesz::linear_grid(x_min, x_max, samples);
            auto rep = riesz::riesz_limit(D, {k, parse_kind(kind_str)}, s, sched, tolerance);
            json params{{"catalog", catalog_name}, {"series", series_path},
                        {"k", k},                  {"kind", kind_str},
                        {"s", riesz::format_complex(s)}, {"x_min", x_min},
                        {"x_max", x_max},          {"samples", samples},
                        {"tolerance", tolerance}};
            if (sink.wants_csv()) {
                std::ostringstream csv;
                csv << "x,re,im\n";
                for (const auto& [x, v] : rep.samples)
                    csv << x << "," << v.real() << "," << v.imag() << "\n";
                sink.write_text(csv.str());
            } else {
                json j = artifact_header("eval", params);
                j["report"] = riesz::to_json(rep);
                sink.write_text(j.dump(2));
            }
            return rep.converged ? 0 : 2;
        }

        if (absc->parsed()) {
            auto D = load_series(catalog_name, series_path);
            if (x_max <= 0.0) x_max = default_x_max(D.frequency());
            auto xs = riesz::linear_grid(x_max / 105.0, x_max, samples);
            riesz::AbscissaEstimate est;
            if (mode == "pointwise")
                est = riesz::bohr_cahen_pointwise(D, k, xs, parse_kind(kind_str));
            else if (mode == "uniform")
                est = riesz::bohr_cahen_uniform(D, k, xs,
                                                riesz::linear_grid(-t_sup, t_sup, t_samples),
                                                parse_kind(kind_str));
            else if (mode == "absolute")
                est = riesz::absolute_abscissa(D, xs);
            else
                riesz::fail(riesz::errc::parse_error, "mode must be pointwise|uniform|absolute");
            json params{{"catalog", catalog_name}, {"series", series_path}, {"k", k},
                        {"kind", kind_str},        {"mode", mode},          {"x_max", x_max},
                        {"samples", samples},      {"t_sup", t_sup}};
            if (sink.wants_csv()) {
                std::ostringstream csv;
                csv << "x,slope\n";
                for (const auto& [x, v] : est.slope_trace) csv << x << "," << v << "\n";
                sink.write_text(csv.str());
            } else {
                json j = artifact_header("abscissa", params);
                j["estimate"] = riesz::to_json(est);
                sink.write_text(j.dump(2));
            }
            return 0;
        }

        if (perron->parsed()) {
            auto entry = riesz::catalog_entry(catalog_name);
            if (!entry.has_oracle())
                riesz::fail(riesz::errc::unknown_catalog_entry,
                            "entry '" + catalog_name + "' has no limit-function evaluator");
            riesz::QuadratureConfig cfg;
            cfg.tolerance = tolerance;
            if (contour_c > 0.0) cfg.contour_c = contour_c;
            if (truncation_T > 0.0) cfg.truncation_T = truncation_T;
            if (growth_bound > 0.0) cfg.growth_bound = growth_bound;
            cfg.growth_exponent = growth_exponent;
            auto res = riesz::perron_summatory(entry.oracle, k, x_at, cfg);
            json params{{"catalog", catalog_name},   {"k", k},
                        {"x", x_at},                 {"contour_c", contour_c},
                        {"truncation_T", truncation_T}, {"tolerance", tolerance}};
            json j = artifact_header("perron", params);
            j["result"] = riesz::to_json(res);
            j["direct_summatory"] =
                riesz::complex_to_json(riesz::summatory(entry.series, k, {0.0, 0.0}, x_at));
            sink.write_text(j.dump(2));
            return 0;
        }

        if (recover->parsed()) {
            auto entry = riesz::catalog_entry(catalog_name);
            if (!entry.has_oracle())
                riesz::fail(riesz::errc::unknown_catalog_entry,
                            "entry '" + catalog_name + "' has no limit-function evaluator");
            riesz::QuadratureConfig cfg;
            cfg.tolerance = tolerance;
            if (contour_c > 0.0) cfg.contour_c = contour_c;
            if (truncation_T > 0.0) cfg.truncation_T = truncation_T;
            auto coeffs = riesz::recover_coefficients(entry.oracle, entry.series.frequency(), k,
                                                      n_max, cfg);
            json params{{"catalog", catalog_name}, {"k", k}, {"n_max", n_max},
                        {"contour_c", contour_c},  {"tolerance", tolerance}};
            json j = artifact_header("recover", params);
            json arr = json::array();
            for (const cplx& a : coeffs) arr.push_back(riesz::complex_to_json(a));
            j["coefficients"] = std::move(arr);
            sink.write_text(j.dump(2));
            return 0;
        }

        if (norm->parsed()) {
            auto entry = riesz::catalog_entry(catalog_name);
            if (!entry.has_oracle())
                riesz::fail(riesz::errc::unknown_catalog_entry,
                            "entry '" + catalog_name + "' has no limit-function evaluator");
            auto sig = parse_grid_spec(grid_sigma);
            double tsup;
            int tn;
            if (std::sscanf(grid_t.c_str(), "%lf:%d", &tsup, &tn) != 2 || tn < 3)
                riesz::fail(riesz::errc::parse_error, "grid-t must be sup:n");
            riesz::EvalGrid grid =
                riesz::make_eval_grid(sig.front(), sig.back(), static_cast<int>(sig.size()),
                                      tsup, tn);
            json params{{"catalog", catalog_name}, {"ell", ell},
                        {"grid_sigma", grid_sigma}, {"grid_t", grid_t}, {"profile", profile}};
            if (profile == "none") {
                auto est = riesz::norm_inf_ell(entry.oracle, {ell, grid});
                json j = artifact_header("norm", params);
                j["value"] = est.value;
                j["argmax"] = riesz::complex_to_json(est.argmax);
                j["grid"] = est.grid_used.resolution;
                sink.write_text(j.dump(2));
                return 0;
            }
            std::vector<std::pair<double, double>> prof;
            std::string col = "sigma,value";
            if (profile == "far-left") {
                auto sigmas = sig;
                std::reverse(sigmas.begin(), sigmas.end());
                prof = riesz::far_left_profile(entry.oracle, ell, sigmas, grid.t_values);
            } else if (profile == "far-right") {
                prof = riesz::far_right_decay(entry.series, ell, sig, grid.t_values);
            } else if (profile == "ratio") {
                if (x_max <= 0.0) x_max = default_x_max(entry.series.frequency());
                const double fnorm = riesz::norm_inf_ell(entry.oracle, {ell, grid}).value;
                auto mr = riesz::maximal_ratio(entry.series, ell, k,
                                               riesz::log_grid(x_max / 100.0, x_max, 32), grid,
                                               fnorm, parse_kind(kind_str));
                prof = std::move(mr.trace);
                col = "x,ratio";
            } else {
                riesz::fail(riesz::errc::parse_error,
                            "profile must be none|far-left|far-right|ratio");
            }
            if (sink.wants_csv()) {
                std::ostringstream csv;
                csv << col << "\n";
                for (const auto& [sg, v] : prof) csv << sg << "," << v << "\n";
                sink.write_text(csv.str());
            } else {
                json j = artifact_header("norm", params);
                json rows = json::array();
                for (const auto& [sg, v] : prof) rows.push_back({sg, v});
                j["profile"] = std::move(rows);
                sink.write_text(j.dump(2));
            }
            return 0;
        }

        if (cat->parsed()) {
            json rows = json::array();
            for (const auto& entry : riesz::catalog_list()) {
                json e;
                e["name"] = entry.name;
                e["label"] = entry.series.label();
                e["frequency"] = riesz::to_json(entry.series.frequency());
                e["oracle_region"] = entry.oracle_region.description;
                json facts = json::array();
                for (const auto& fact : entry.known_facts) {
                    json f{{"key", fact.key},
                           {"provenance", fact.provenance},
                           {"note", fact.note},
                           {"testable", fact.testable}};
                    f["value"] = std::isinf(fact.value)
                                     ? (fact.value > 0 ? 1e308 : -1e308)
                                     : fact.value;
                    facts.push_back(std::move(f));
                }
                e["known_facts"] = std::move(facts);
                rows.push_back(std::move(e));
            }
            json j = artifact_header("catalog", json::object());
            j["entries"] = std::move(rows);
            sink.write_text(j.dump(2));
            return 0;
        }

        if (verify->parsed()) {
            const auto rows = riesz::run_verification();
            std::ostringstream table;
            int failures = 0;
            for (const auto& row : rows) {
                char line[256];
                std::snprintf(line, sizeof(line), "%-4s %-40s %s  (%.2fs)  %s\n", row.id.c_str(),
                              row.name.c_str(), row.pass ? "PASS" : "FAIL", row.seconds,
                              row.detail.c_str());
                table << line;
                if (!row.pass) ++failures;
            }
            table << failures << " failures out of " << rows.size() << " rows\n";
            sink.write_text(table.str());
            return failures == 0 ? 0 : 2;
        }
    } catch (const riesz::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case riesz::errc::parse_error:
            case riesz::errc::unknown_catalog_entry:
            case riesz::errc::domain_error:
            case riesz::errc::range_exceeded:
                return 1;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
