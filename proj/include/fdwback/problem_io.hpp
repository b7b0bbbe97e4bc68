#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "fdwback/solver.hpp"
#include "fdwback/spectral.hpp"

namespace fdw {

using ordered_json = nlohmann::ordered_json;

/// Serialized problem description consumed by the CLI.
struct ProblemSpec {
  double alpha = 1.5;
  double T = 1.0;
  Spectrum spectrum;
  SpectralCoeffs a;  // input coefficients of the command (initial or final data)
  SpectralCoeffs b;
  double psi_floor = 1e-8;
  bool has_data = false;
};

ProblemSpec parse_problem(const ordered_json& j);
ProblemSpec load_problem(const std::string& path);

Spectrum parse_spectrum(const ordered_json& j);
ordered_json spectrum_to_json(const Spectrum& s);

std::vector<double> flatten(const SpectralCoeffs& c);
SpectralCoeffs unflatten(const std::vector<double>& flat, const Spectrum& s);

/// Fixed 17-significant-digit formatting; all CLI float output goes
/// through here so repeated runs are byte-identical.
std::string format_double(double x);

/// JSON dump with format_double applied to every floating-point number.
std::string dump_json(const ordered_json& j, int indent = 0);

ordered_json coeffs_to_json(const SpectralCoeffs& c);
ordered_json zeroset_to_json(const ZeroSet& z);
ordered_json lambda_to_json(const Lambda& l);
ordered_json diagnostics_to_json(const BackwardDiagnostics& d);

/// Structural schema check of a subcommand's JSON output; throws on mismatch.
void validate_output(const std::string& command, const ordered_json& j);

void write_grid_csv(std::ostream& os, const GridFunction& f);
GridFunction read_grid_csv(std::istream& is, double length);

}  // namespace fdw
