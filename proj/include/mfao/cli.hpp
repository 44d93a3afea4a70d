#pragma once

// Command-line front end. Kept in the library so it can be driven from tests.

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mfao/bogoliubov.hpp"
#include "mfao/fock.hpp"
#include "mfao/meanfield.hpp"
#include "mfao/serialize.hpp"

namespace mfao::cli {

enum class ExitCode : int { kOk = 0, kValidationFailure = 1, kArgumentError = 2, kIoError = 3 };

enum class Command { kSpectrum, kEvolveExact, kEvolveMeanfield, kSymmetryReport, kClassicalCheck, kValidate };

std::string_view command_name(Command c);
Command command_from_name(std::string_view name);

struct RunConfig {
  ModelParams params;  // default (1, 0.5, 0.25) is a demo choice, not a physical one
  BcsAngles initial_angles;
  Occupations occupations;
  std::array<Complex, 4> state{Complex(1.0), Complex(1.0), Complex(1.0), Complex(1.0)};
  double t_end = 10.0;
  int steps = 100;
  IntegrationMethod method = IntegrationMethod::kClosedForm;
  double rk4_steps_per_unit = 1000.0;
  Format format = Format::kCsv;
  std::string out = "-";  // "-" is stdout
  std::string label = "mfao";

  /// Throws ArgumentError when steps < 1, t_end < 0 or occupations leave [0, 1].
  void validate() const;
};

/// "re:im" or "re" per amplitude, four comma-separated amplitudes.
std::array<Complex, 4> parse_state(std::string_view text);

struct CommandOutput {
  Table table;
  nlohmann::json meta;
  ExitCode status = ExitCode::kOk;
};

/// Runs the command without touching the filesystem.
CommandOutput execute(Command command, const RunConfig& cfg);

/// Full entry point: parses argv (flags override the --config file), runs,
/// writes the output, returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mfao::cli
