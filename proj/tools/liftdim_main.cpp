// liftdim: data-space dimension of a Fresnel-zone phase retrieval problem.
//
// Assembles the lifted linear operator of a strip current, computes its
// singular/eigen spectra (plain, weighted-adjoint, closed-form separable
// approximation), and evaluates the M_bar = M_u * M_s bound.
//
// Exit codes: 0 success, 1 property failure, 2 config error, 3 numerical
// failure.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "liftdim/report.hpp"

namespace {

using namespace liftdim;

struct GlobalOpts {
    std::string config_path;
    double tau_db_override = 0.0;
    bool tau_db_set = false;
    bool svg = false;
    std::string manifest_path;
};

ProblemConfig resolve_config(const GlobalOpts& opts) {
    ProblemConfig config = opts.config_path.empty() ? ProblemConfig{} : load_config(opts.config_path);
    if (opts.tau_db_set) config.tau_db = opts.tau_db_override;
    config.validate();
    return config;
}

std::string svg_path_for(const std::string& csv_path) {
    const auto dot = csv_path.find_last_of('.');
    if (dot == std::string::npos) return csv_path + ".svg";
    return csv_path.substr(0, dot) + ".svg";
}

void finish_manifest(RunManifest& manifest, const GlobalOpts& opts, double t_start,
                     const std::string& default_path) {
    manifest.timings_s.emplace_back("total", std::chrono::duration<double>(
        std::chrono::steady_clock::now().time_since_epoch()).count() - t_start);
    const std::string path = !opts.manifest_path.empty() ? opts.manifest_path : default_path;
    if (!path.empty()) write_manifest(manifest, path);
}

double wall_now() {
    return std::chrono::duration<double>(
        std::chrono::steady_clock::now().time_since_epoch()).count();
}

int run_bounds(const GlobalOpts& opts) {
    const double t0 = wall_now();
    const ProblemConfig config = resolve_config(opts);
    const BoundResult b = compute_bounds(config);
    std::printf("M_u=%d M_s=%d M_bar=%d\n", b.m_u_ceil, b.m_s_ceil, b.m_bar_ceil);
    std::printf("m_u_real=%s m_s_real=%s m_bar_real=%s\n", format_double(b.m_u).c_str(),
                format_double(b.m_s).c_str(), format_double(b.m_bar).c_str());
    RunManifest manifest;
    manifest.config = config;
    manifest.subcommand = "bounds";
    manifest.warnings = validate_fresnel_regime(config);
    for (const auto& w : manifest.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    manifest.extra = {{"m_u", std::to_string(b.m_u_ceil)},
                      {"m_s", std::to_string(b.m_s_ceil)},
                      {"m_bar", std::to_string(b.m_bar_ceil)},
                      {"m_u_real", format_double(b.m_u)},
                      {"m_s_real", format_double(b.m_s)},
                      {"m_bar_real", format_double(b.m_bar)}};
    finish_manifest(manifest, opts, t0, "");
    return 0;
}

int run_spectrum_cmd(const GlobalOpts& opts, const std::string& operator_name,
                     const std::string& out_csv) {
    const double t0 = wall_now();
    const ProblemConfig config = resolve_config(opts);
    const auto kind = parse_operator_kind(operator_name);
    if (!kind) throw ConfigError("operator", "unknown operator kind: " + operator_name);

    RunManifest manifest;
    manifest.config = config;
    manifest.subcommand = "spectrum";
    manifest.warnings = validate_fresnel_regime(config);

    const SpectrumResult spectrum = run_spectrum(config, *kind, &manifest.timings_s);
    write_spectrum_csv(spectrum, out_csv);
    manifest.artifacts.emplace_back(out_csv, "spectrum_csv");
    if (opts.svg) {
        const std::string svg = svg_path_for(out_csv);
        write_spectrum_svg(spectrum, svg);
        manifest.artifacts.emplace_back(svg, "spectrum_svg");
    }
    manifest.extra = {{"kind", to_string(spectrum.kind)},
                      {"critical_index", std::to_string(spectrum.critical_index)},
                      {"threshold_db", format_double(spectrum.threshold_db)},
                      {"values", std::to_string(spectrum.size())},
                      {"complex_eig_flags", std::to_string(spectrum.complex_eig_flags.size())}};
    std::printf("%s: %lld values, critical index %d at %s dB -> %s\n",
                to_string(spectrum.kind).c_str(), static_cast<long long>(spectrum.size()),
                spectrum.critical_index, format_double(spectrum.threshold_db).c_str(),
                out_csv.c_str());
    finish_manifest(manifest, opts, t0, out_csv + ".manifest.json");
    return 0;
}

int run_slepian_cmd(const GlobalOpts& opts, const std::string& axis, const std::string& out_csv) {
    const double t0 = wall_now();
    const ProblemConfig config = resolve_config(opts);
    if (axis != "u" && axis != "s") throw ConfigError("axis", "unknown axis: " + axis);

    const SlepianSpectrum spectrum = run_slepian(config, axis[0]);
    write_slepian_csv(spectrum, out_csv);

    RunManifest manifest;
    manifest.config = config;
    manifest.subcommand = "slepian";
    manifest.artifacts.emplace_back(out_csv, "slepian_csv");
    if (opts.svg) {
        const std::string svg = svg_path_for(out_csv);
        write_slepian_svg(spectrum, svg);
        manifest.artifacts.emplace_back(svg, "slepian_svg");
    }
    manifest.extra = {{"axis", axis},
                      {"omega", format_double(spectrum.omega)},
                      {"shannon", format_double(spectrum.shannon)},
                      {"count_above_half", std::to_string(spectrum.count_above(0.5))}};
    std::printf("slepian %s-axis: shannon %s, %d eigenvalues above 0.5 -> %s\n", axis.c_str(),
                format_double(spectrum.shannon).c_str(), spectrum.count_above(0.5),
                out_csv.c_str());
    finish_manifest(manifest, opts, t0, out_csv + ".manifest.json");
    return 0;
}

int run_domain_cmd(const GlobalOpts& opts, int n_samples, const std::string& out_csv) {
    const double t0 = wall_now();
    const ProblemConfig config = resolve_config(opts);
    const LiftedDomainSample sample = sample_lifted_domain(config, n_samples);
    write_domain_csv(sample, out_csv);

    RunManifest manifest;
    manifest.config = config;
    manifest.subcommand = "domain";
    manifest.artifacts.emplace_back(out_csv, "domain_csv");
    if (opts.svg) {
        const std::string svg = svg_path_for(out_csv);
        write_domain_svg(sample, svg);
        manifest.artifacts.emplace_back(svg, "domain_svg");
    }
    manifest.extra = {{"points", std::to_string(sample.points.size())},
                      {"sampling", "deterministic midpoint lattice, diagonal excluded"},
                      {"x1_half_width", format_double(sample.x1_half_width)},
                      {"x2_half_width", format_double(sample.x2_half_width)}};
    std::printf("domain: %zu points within [-%s, %s] x [-%s, %s] -> %s\n", sample.points.size(),
                format_double(sample.x1_half_width).c_str(),
                format_double(sample.x1_half_width).c_str(),
                format_double(sample.x2_half_width).c_str(),
                format_double(sample.x2_half_width).c_str(), out_csv.c_str());
    finish_manifest(manifest, opts, t0, out_csv + ".manifest.json");
    return 0;
}

int run_verify_cmd(const GlobalOpts& opts) {
    const double t0 = wall_now();
    const ProblemConfig config = resolve_config(opts);
    const auto results = verify_properties(config);
    bool all_pass = true;
    RunManifest manifest;
    manifest.config = config;
    manifest.subcommand = "verify";
    for (const auto& p : results) {
        all_pass = all_pass && p.pass;
        std::printf("%s %-26s measured=%.3e tol=%.1e (%s)\n", p.pass ? "PASS" : "FAIL",
                    p.name.c_str(), p.measured, p.tolerance, p.detail.c_str());
        manifest.extra.emplace_back(p.name, p.pass ? "pass" : "fail");
    }
    finish_manifest(manifest, opts, t0, "");
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Data-space dimension of a lifted Fresnel-zone phase retrieval operator"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand

    GlobalOpts opts;
    app.add_option("--config", opts.config_path, "Config JSON path (defaults to the built-in test case)");
    app.add_option("--tau-db", opts.tau_db_override, "Significance threshold in dB (overrides config)")
        ->each([&opts](const std::string&) { opts.tau_db_set = true; });
    app.add_flag("--svg", opts.svg, "Also emit an SVG plot next to each CSV");
    app.add_option("--manifest", opts.manifest_path, "Manifest JSON path (default: <out>.manifest.json)");

    auto* bounds = app.add_subcommand("bounds", "Closed-form data-space bounds M_u, M_s, M_bar");

    std::string operator_name = "lifting", spectrum_out = "spectrum.csv";
    auto* spectrum = app.add_subcommand("spectrum", "Spectrum of one operator route");
    spectrum->add_option("--operator", operator_name, "lifting | weighted | approx | product");
    spectrum->add_option("--out", spectrum_out, "Output CSV path")->required();

    std::string axis = "u", slepian_out = "slepian.csv";
    auto* slepian = app.add_subcommand("slepian", "Slepian-Pollak eigenvalues of one axis");
    slepian->add_option("--axis", axis, "u | s");
    slepian->add_option("--out", slepian_out, "Output CSV path")->required();

    int n_samples = 16384;
    std::string domain_out = "domain.csv";
    auto* domain = app.add_subcommand("domain", "Scatter sample of the mapped domain D1-hat");
    domain->add_option("--samples", n_samples, "Lattice sample budget");
    domain->add_option("--out", domain_out, "Output CSV path")->required();

    auto* verify = app.add_subcommand("verify", "Run the cross-module property suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    liftdim::configure_blas_runtime();

    try {
        if (bounds->parsed()) return run_bounds(opts);
        if (spectrum->parsed()) return run_spectrum_cmd(opts, operator_name, spectrum_out);
        if (slepian->parsed()) return run_slepian_cmd(opts, axis, slepian_out);
        if (domain->parsed()) return run_domain_cmd(opts, n_samples, domain_out);
        if (verify->parsed()) return run_verify_cmd(opts);
    } catch (const liftdim::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const liftdim::NumericalError& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
