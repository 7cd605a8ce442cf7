#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftdim/config.hpp"
#include "liftdim/lifting_op.hpp"
#include "liftdim/slepian.hpp"
#include "liftdim/spectra.hpp"

namespace liftdim {

/// Parse a config JSON file with top-level keys geometry{a, u_max |
/// theta_max_deg, r_min, r_max}, grids{n_x, n_u, n_s}, analysis{tau_db}.
/// Unknown keys are rejected (ConfigError). Missing keys fall back to the
/// standard test-case defaults.
ProblemConfig load_config(const std::string& path);
ProblemConfig parse_config_json(const std::string& text);

/// The four operator routes the spectrum subcommand can compute.
enum class OperatorKind { lifting, weighted, approx, product };
std::optional<OperatorKind> parse_operator_kind(const std::string& name);

/// Record of one CLI run: resolved config, produced files, timings, warnings.
struct RunManifest {
    ProblemConfig config;
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> artifacts;  // (path, kind)
    std::vector<std::pair<std::string, double>> timings_s;
    std::vector<std::string> warnings;
    std::vector<std::pair<std::string, std::string>> extra;  // scalar results

    std::string to_json() const;
};
void write_manifest(const RunManifest& manifest, const std::string& path);
/// Re-read a manifest written by write_manifest (round-trip check).
RunManifest read_manifest(const std::string& path);

/// Deterministic number formatting for CSV output (shortest round-trip,
/// locale independent).
std::string format_double(double v);

/// Orchestration: assemble the requested operator route on the config's
/// grids and return its spectrum. `timings` (optional) collects stage times.
SpectrumResult run_spectrum(const ProblemConfig& config, OperatorKind kind,
                            std::vector<std::pair<std::string, double>>* timings = nullptr);

/// Slepian spectrum of the u- or s-axis operator for this config.
SlepianSpectrum run_slepian(const ProblemConfig& config, char axis);

/// CSV emission. Every file has a header row, comma separators, '.' decimal
/// points and LF line endings.
void write_spectrum_csv(const SpectrumResult& spectrum, const std::string& path);
void write_slepian_csv(const SlepianSpectrum& spectrum, const std::string& path);
void write_domain_csv(const LiftedDomainSample& sample, const std::string& path);

/// Static SVG companions to the CSVs (dB decay plot / scatter).
void write_spectrum_svg(const SpectrumResult& spectrum, const std::string& path);
void write_slepian_svg(const SlepianSpectrum& spectrum, const std::string& path);
void write_domain_svg(const LiftedDomainSample& sample, const std::string& path);

/// One cross-module property check of the verify subcommand.
struct PropertyResult {
    std::string name;
    bool pass = false;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Runs the end-to-end property suite: lifting consistency, Gram consistency,
/// similarity invariance, tensor-product exactness, and the bound check.
/// Identity checks that scale cubically run on documented reduced grids;
/// each result names the grid it used.
std::vector<PropertyResult> verify_properties(const ProblemConfig& config);

/// Caps LAPACK/OpenMP parallelism from LIFTED_SPECTRUM_THREADS if set, and
/// pins a supported OpenBLAS core type when the host masks CPUID (some VMs
/// do), which would otherwise drop the BLAS to generic kernels. Call once
/// before the first dense solve.
void configure_blas_runtime();

}  // namespace liftdim
