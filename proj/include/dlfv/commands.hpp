#pragma once

#include "dlfv/catalog.hpp"
#include "dlfv/config.hpp"

namespace dlfv {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumerical = 2;

/// Instantiates the catalogued scenario named in the config, applying
/// parameter and domain overrides. Throws ConfigError for unknown names,
/// unknown parameters or precondition violations.
Scenario scenario_from_config(const RunConfig& c);

/// Writes spectrum.csv plus per-state wavefunction files state_<comp>_<n>.dat
/// into the output directory. Deterministic output: 15 significant digits,
/// LF line endings, fixed-seed eigenvectors.
int cmd_spectrum(const RunConfig& c);

/// Writes compare_report.txt / compare_report.csv with per-level
/// numeric-vs-analytic rows, x-vs-y transform-equivalence rows, the SUSY
/// pairing verdict and, for the shifted oscillator, quoted-vs-derived
/// spectrum rows flagged ERRATUM when they disagree. Returns kExitNumerical
/// when any check fails.
int cmd_compare(const RunConfig& c);

/// Writes potential_<plus|minus>_<x|y>.dat samples, extrema.csv and a
/// gnuplot script (potentials.gp) with the two-panel layout.
int cmd_potential_scan(const RunConfig& c);

}  // namespace dlfv
