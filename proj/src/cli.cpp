#include "mfao/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "mfao/classical.hpp"
#include "mfao/errors.hpp"
#include "mfao/symmetry.hpp"
#include "mfao/validation.hpp"
#include "mfao/version.hpp"

namespace mfao::cli {

namespace {

constexpr std::array<Command, 6> kCommands = {Command::kSpectrum,       Command::kEvolveExact,
                                              Command::kEvolveMeanfield, Command::kSymmetryReport,
                                              Command::kClassicalCheck,  Command::kValidate};

double parse_double(std::string_view text) {
  // strtod accepts the same spellings as the CLI parser ("1e-3", "-0.5").
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ArgumentError("invalid number '" + s + "'");
  }
  return v;
}

nlohmann::json params_json(const ModelParams& p) {
  return {{"hbar_omega", p.hbar_omega}, {"u", p.u}, {"gb_b", p.gb_b}};
}

nlohmann::json angles_json(const BcsAngles& a) {
  return {{"theta", a.theta}, {"phi", a.phi}, {"gamma", a.gamma}, {"xi", a.xi}};
}

std::string describe(const ReducedDynamics& d) {
  if (d.rates.empty() && d.quantized.empty() && d.arbitrary.empty()) return "none";
  std::string s;
  auto add = [&s](const std::string& item) {
    if (!s.empty()) s += ';';
    s += item;
  };
  for (const auto& [angle, rate] : d.rates) add(std::string(angle_name(angle)) + "'=" + format_double(rate));
  for (Angle a : d.quantized) add(std::string(angle_name(a)) + "=k*pi/2");
  for (Angle a : d.arbitrary) add(std::string(angle_name(a)) + "=arbitrary");
  return s;
}

std::string_view state_label(FockIndex k) {
  switch (k) {
    case kVacuum: return "vacuum";
    case kSpinUp: return "up";
    case kSpinDown: return "down";
    case kPair: return "pair";
  }
  return "?";
}

CommandOutput spectrum_output(const RunConfig& cfg) {
  CommandOutput o;
  o.table.columns = {"basis_index", "state", "energy", "particle_number", "spin_z"};
  const FockOperator number = observable(Observable::kNumber);
  const FockOperator spin = observable(Observable::kSpinZ);
  for (const Level& l : spectrum(cfg.params)) {
    o.table.rows.push_back({static_cast<double>(l.state), std::string(state_label(l.state)), l.energy,
                            number(l.state, l.state).real(), spin(l.state, l.state).real()});
  }
  return o;
}

CommandOutput evolve_exact_output(const RunConfig& cfg) {
  CommandOutput o;
  o.table.columns = {"t",      "re_rho", "im_rho", "re_beta", "im_beta", "re_alpha", "im_alpha",
                     "re_tau", "im_tau", "norm",   "number",  "spin_z",  "energy"};
  StateVector raw;
  raw << cfg.state[0], cfg.state[1], cfg.state[2], cfg.state[3];
  const FockOperator number = observable(Observable::kNumber);
  const FockOperator spin = observable(Observable::kSpinZ);
  const FockOperator h = hamiltonian(cfg.params);
  bool renormalized = false;
  for (double t : uniform_grid(cfg.t_end, cfg.steps)) {
    const EvolvedState e = evolve_exact(raw, cfg.params, t);
    renormalized = e.renormalized;
    const StateVector& s = e.state;
    o.table.rows.push_back({t, s(0).real(), s(0).imag(), s(1).real(), s(1).imag(), s(2).real(),
                            s(2).imag(), s(3).real(), s(3).imag(), s.norm(),
                            expectation(number, s).real(), expectation(spin, s).real(),
                            expectation(h, s).real()});
  }
  nlohmann::json initial = nlohmann::json::array();
  for (const Complex& c : cfg.state) initial.push_back({c.real(), c.imag()});
  o.meta["initial_state"] = initial;
  o.meta["renormalized"] = renormalized;
  o.meta["t_end"] = cfg.t_end;
  o.meta["steps"] = cfg.steps;
  return o;
}

CommandOutput evolve_meanfield_output(const RunConfig& cfg) {
  CommandOutput o;
  IntegrateOptions opts;
  opts.rk4_steps_per_unit = cfg.rk4_steps_per_unit;
  const Trajectory traj = integrate(cfg.initial_angles, cfg.occupations, cfg.params,
                                    uniform_grid(cfg.t_end, cfg.steps), cfg.method, opts);
  o.table = trajectory_table(traj);
  o.meta["method"] = std::string(method_name(cfg.method));
  o.meta["initial_angles"] = angles_json(cfg.initial_angles);
  o.meta["occupations"] = {{"p1", cfg.occupations.p1}, {"p2", cfg.occupations.p2}};
  o.meta["t_end"] = cfg.t_end;
  o.meta["steps"] = cfg.steps;
  if (cfg.method == IntegrationMethod::kRk4) o.meta["rk4_steps_per_unit"] = cfg.rk4_steps_per_unit;
  return o;
}

CommandOutput symmetry_output(const RunConfig& cfg) {
  CommandOutput o;
  o.table.columns = {"kind",
                     "theta",
                     "phi",
                     "gamma",
                     "xi",
                     "classification",
                     "number_conserved",
                     "spin_conserved",
                     "number_commutator_norm",
                     "spin_commutator_norm",
                     "has_dynamics",
                     "reduced_dynamics"};
  for (const KindSurvey& s : probe_all_kinds(cfg.params)) {
    o.table.rows.push_back({std::string(kind_name(s.kind)), s.angles.theta, s.angles.phi, s.angles.gamma,
                            s.angles.xi, std::string(class_name(s.report.classification)),
                            s.report.number_conserved, s.report.spin_conserved,
                            s.report.number_commutator_norm, s.report.spin_commutator_norm,
                            s.dynamics.evolving, describe(s.dynamics)});
  }
  o.meta["conservation_tolerance"] = kConservationTolerance;
  return o;
}

CommandOutput classical_output(const RunConfig& cfg) {
  CommandOutput o;
  EquivalenceOptions opt;
  opt.initial = cfg.initial_angles;
  opt.occupations = cfg.occupations;
  opt.t_end = cfg.t_end;
  opt.steps = cfg.steps;
  opt.method = cfg.method;
  const EquivalenceReport r = equivalence_check(cfg.params, opt);
  const HamiltonRates hr = hamilton_rates(cfg.params);
  const AngleRates qr = closed_form_rates(cfg.params);

  o.table.columns = {"quantity", "value", "tolerance", "passed"};
  auto row = [&o](std::string name, double value, double tol) {
    o.table.rows.push_back({std::move(name), value, tol, value <= tol});
  };
  o.table.rows.push_back({std::string("d_alpha1"), hr.d_alpha1, 0.0, hr.d_alpha1 == qr.d_theta});
  o.table.rows.push_back({std::string("d_alpha2"), hr.d_alpha2, 0.0, hr.d_alpha2 == qr.d_phi});
  row("rate_deviation", r.rate_deviation, 0.0);
  row("action_drift", r.action_drift, kEquivalenceTolerance);
  row("slope_deviation", r.slope_deviation, r.slope_tolerance);
  row("energy_drift", r.energy_drift, kEquivalenceTolerance);
  row("bound_violation", r.bound_violation, 0.0);
  o.meta["passed"] = r.passed;
  o.meta["method"] = std::string(method_name(cfg.method));
  o.status = r.passed ? ExitCode::kOk : ExitCode::kValidationFailure;
  return o;
}

CommandOutput validate_output() {
  CommandOutput o;
  const std::vector<CheckResult> results = run_validation_suite();
  o.table.columns = {"check", "passed", "max_deviation", "tolerance"};
  for (const CheckResult& r : results) {
    o.table.rows.push_back({r.name, r.passed, r.max_deviation, r.tolerance});
  }
  o.meta["passed"] = all_passed(results);
  o.status = all_passed(results) ? ExitCode::kOk : ExitCode::kValidationFailure;
  return o;
}

}  // namespace

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kSpectrum: return "spectrum";
    case Command::kEvolveExact: return "evolve-exact";
    case Command::kEvolveMeanfield: return "evolve-meanfield";
    case Command::kSymmetryReport: return "symmetry-report";
    case Command::kClassicalCheck: return "classical-check";
    case Command::kValidate: return "validate";
  }
  return "?";
}

Command command_from_name(std::string_view name) {
  for (Command c : kCommands) {
    if (command_name(c) == name) return c;
  }
  throw ArgumentError("unknown command '" + std::string(name) + "'");
}

void RunConfig::validate() const {
  params.validate();
  initial_angles.validate();
  occupations.validate();
  if (steps < 1) throw ArgumentError("--steps must be >= 1");
  if (!std::isfinite(t_end) || t_end < 0.0) throw ArgumentError("--t-end must be finite and >= 0");
  if (!(rk4_steps_per_unit > 0.0)) throw ArgumentError("--rk4-steps-per-unit must be > 0");
  for (const Complex& c : state) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw ArgumentError("--state must be finite");
  }
}

std::array<Complex, 4> parse_state(std::string_view text) {
  std::array<Complex, 4> out{};
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (count == 4) throw ArgumentError("--state takes exactly four amplitudes");
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      out[count] = Complex(parse_double(item), 0.0);
    } else {
      out[count] = Complex(parse_double(item.substr(0, colon)), parse_double(item.substr(colon + 1)));
    }
    ++count;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (count != 4) throw ArgumentError("--state takes exactly four amplitudes");
  return out;
}

CommandOutput execute(Command command, const RunConfig& cfg) {
  cfg.validate();
  CommandOutput o;
  switch (command) {
    case Command::kSpectrum: o = spectrum_output(cfg); break;
    case Command::kEvolveExact: o = evolve_exact_output(cfg); break;
    case Command::kEvolveMeanfield: o = evolve_meanfield_output(cfg); break;
    case Command::kSymmetryReport: o = symmetry_output(cfg); break;
    case Command::kClassicalCheck: o = classical_output(cfg); break;
    case Command::kValidate: o = validate_output(); break;
  }
  o.meta["command"] = std::string(command_name(command));
  o.meta["version"] = kVersion;
  o.meta["label"] = cfg.label;
  o.meta["params"] = params_json(cfg.params);
  return o;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean-field laboratory for the fermionic anharmonic oscillator in a magnetic field", "mfao"};
  RunConfig cfg;
  std::string command_text, state_text, method_text = "closed_form", format_text = "csv";

  std::vector<std::string> names;
  for (Command c : kCommands) names.emplace_back(command_name(c));
  app.add_option("command", command_text, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--hbar-omega", cfg.params.hbar_omega, "Single-particle level hbar*omega");
  app.add_option("--u", cfg.params.u, "Pairing interaction U");
  app.add_option("--gbb", cfg.params.gb_b, "Magnetic coupling g_B*B");
  app.add_option("--theta0", cfg.initial_angles.theta, "Initial theta");
  app.add_option("--phi0", cfg.initial_angles.phi, "Initial phi");
  app.add_option("--gamma0", cfg.initial_angles.gamma, "Initial gamma");
  app.add_option("--xi0", cfg.initial_angles.xi, "Initial xi");
  app.add_option("--p1", cfg.occupations.p1, "Quasiparticle occupation p1");
  app.add_option("--p2", cfg.occupations.p2, "Quasiparticle occupation p2");
  app.add_option("--state", state_text, "Initial amplitudes R,B,A,T; each re or re:im");
  app.add_option("--t-end", cfg.t_end, "Final time");
  app.add_option("--steps", cfg.steps, "Number of time steps");
  app.add_option("--method", method_text, "Mean-field integrator")
      ->check(CLI::IsMember({"closed_form", "rk4"}));
  app.add_option("--rk4-steps-per-unit", cfg.rk4_steps_per_unit, "RK4 substeps per unit time");
  app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "Output path ('-' for stdout)");
  app.add_option("--label", cfg.label, "Run label recorded in the metadata");
  app.set_config("--config", "", "key=value config file; command-line flags take precedence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    err << "mfao: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kIoError);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kArgumentError);
  }

  CommandOutput result;
  try {
    if (!state_text.empty()) cfg.state = parse_state(state_text);
    cfg.method = method_from_name(method_text);
    cfg.format = format_from_name(format_text);
    result = execute(command_from_name(command_text), cfg);
  } catch (const ArgumentError& e) {
    err << "mfao: " << e.what() << '\n';
    return static_cast<int>(ExitCode::kArgumentError);
  }

  const std::string text = serialize(result.table, result.meta, cfg.format);
  if (cfg.out == "-") {
    out << text;
    out.flush();
  } else {
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "mfao: cannot open '" << cfg.out << "' for writing\n";
      return static_cast<int>(ExitCode::kIoError);
    }
    file << text;
    file.close();
    if (!file) {
      err << "mfao: failed writing '" << cfg.out << "'\n";
      return static_cast<int>(ExitCode::kIoError);
    }
  }
  if (result.status != ExitCode::kOk) {
    err << "mfao: " << command_text << " reported failures\n";
  }
  return static_cast<int>(result.status);
}

}  // namespace mfao::cli
