#include "mfao/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mfao/bogoliubov.hpp"
#include "mfao/classical.hpp"
#include "mfao/fock.hpp"
#include "mfao/meanfield.hpp"
#include "mfao/symmetry.hpp"

namespace mfao {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  BcsAngles angles() {
    return {uniform(-kTwoPi, kTwoPi), uniform(-kTwoPi, kTwoPi), uniform(-kTwoPi, kTwoPi),
            uniform(-kTwoPi, kTwoPi)};
  }
  Occupations occupations() { return {uniform(0.0, 1.0), uniform(0.0, 1.0)}; }
  ModelParams params() { return {uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0)}; }
  StateVector state() {
    StateVector s;
    for (int k = 0; k < 4; ++k) s(k) = Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    return s.normalized();
  }

 private:
  std::mt19937_64 rng_;
};

CheckResult check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation <= tolerance, deviation, tolerance};
}

double car_residual(const std::array<FockOperator, 2>& ann, const std::array<FockOperator, 2>& cre) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      FockOperator delta = FockOperator::Zero();
      if (i == j) delta.setIdentity();
      worst = std::max({worst, max_abs(anticommutator(ann[i], cre[j]) - delta),
                        max_abs(anticommutator(ann[i], ann[j])),
                        max_abs(anticommutator(cre[i], cre[j]))});
    }
  }
  return worst;
}

double complex_gap(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options) {
  Sampler rng(options.seed);
  const int n = std::max(1, options.draws);
  std::vector<CheckResult> out;

  // fock-algebra
  out.push_back(check("car_particle", car_residual({annihilation_op(1), annihilation_op(2)},
                                                   {creation_op(1), creation_op(2)}), 1e-15));
  {
    double spec_gap = 0.0, charge_gap = 0.0, norm_gap = 0.0;
    for (int k = 0; k < n; ++k) {
      const ModelParams p = rng.params();
      const FockOperator h = hamiltonian(p);
      FockOperator diag = FockOperator::Zero();
      for (const Level& l : spectrum(p)) diag(l.state, l.state) = l.energy;
      spec_gap = std::max(spec_gap, max_abs(h - diag));
      charge_gap = std::max({charge_gap, max_abs(commutator(h, observable(Observable::kNumber))),
                             max_abs(commutator(h, observable(Observable::kSpinZ)))});
      const StateVector s = rng.state();
      norm_gap = std::max(norm_gap, std::abs(evolve_exact(s, p, rng.uniform(-50.0, 50.0)).state.norm() - 1.0));
    }
    out.push_back(check("hamiltonian_matches_spectrum", spec_gap, 0.0));
    out.push_back(check("hamiltonian_conserves_number_and_spin", charge_gap, 0.0));
    out.push_back(check("exact_evolution_preserves_norm", norm_gap, 1e-12));
  }

  // bogoliubov
  {
    double unitarity = 0.0, car = 0.0, adjoint = 0.0;
    for (int k = 0; k < n; ++k) {
      const BcsAngles a = rng.angles();
      unitarity = std::max(unitarity, unitarity_residual(assemble_transform(build_blocks(a))));
      const std::array<FockOperator, 2> ann = {quasiparticle_op(a, 1, false), quasiparticle_op(a, 2, false)};
      const std::array<FockOperator, 2> cre = {quasiparticle_op(a, 1, true), quasiparticle_op(a, 2, true)};
      car = std::max(car, car_residual(ann, cre));
      adjoint = std::max({adjoint, max_abs(cre[0] - ann[0].adjoint()), max_abs(cre[1] - ann[1].adjoint())});
    }
    out.push_back(check("transform_unitarity", unitarity, 1e-12));
    out.push_back(check("car_quasiparticle", car, 1e-12));
    out.push_back(check("quasiparticle_adjoint", adjoint, 0.0));
  }

  // meanfield-dynamics
  {
    double density = 0.0, stationary = 0.0, residual = 0.0, trace_gap = 0.0, matrix_gap = 0.0;
    for (int k = 0; k < n; ++k) {
      const BcsAngles a = rng.angles();
      const Occupations occ = rng.occupations();
      const ModelParams p = rng.params();

      const FockOperator f0 = meanfield_density(a, occ);
      const FockOperator n1 = quasiparticle_op(a, 1, true) * quasiparticle_op(a, 1, false);
      const FockOperator n2 = quasiparticle_op(a, 2, true) * quasiparticle_op(a, 2, false);
      density = std::max({density, std::abs(f0.trace() - 1.0), std::abs((f0 * n1).trace() - occ.p1),
                          std::abs((f0 * n2).trace() - occ.p2), max_abs(f0 - f0.adjoint())});

      const EomMatrices trace = eom_rhs_trace(a, occ, p);
      stationary = std::max({stationary, std::abs(trace.normal(0, 0)), std::abs(trace.normal(1, 1))});

      const AngleRates r = closed_form_rates(p);
      const ChannelPair res = eom_residual_general(a, r, occ, p);
      residual = std::max({residual, std::abs(res.spin), std::abs(res.pairing)});

      const ChannelPair from_trace = trace_channels(trace);
      const ChannelPair drive = eom_driving_terms(a, occ, p);
      trace_gap = std::max({trace_gap, complex_gap(from_trace.spin, drive.spin),
                            complex_gap(from_trace.pairing, drive.pairing)});

      const EomMatrices lhs = eom_lhs_matrices(a, r, occ);
      matrix_gap = std::max({matrix_gap, max_abs(lhs.normal - trace.normal.transpose()),
                             max_abs(lhs.anomalous - trace.anomalous.transpose())});
    }
    out.push_back(check("meanfield_density_trace_and_occupations", density, 1e-12));
    out.push_back(check("occupation_stationarity", stationary, 1e-12));
    out.push_back(check("closed_form_rates_solve_channel_equations", residual, 1e-10));
    out.push_back(check("trace_oracle_matches_driving_terms", trace_gap, 1e-10));
    out.push_back(check("matrix_eom_matches_trace_oracle", matrix_gap, 1e-10));
  }
  {
    // Reduced rates of the evolving kinds against the restricted solver.
    double gap = 0.0;
    for (int k = 0; k < std::min(n, 200); ++k) {
      const ModelParams p = rng.params();
      for (ParameterizationKind kind : {ParameterizationKind::kPairing, ParameterizationKind::kSpin,
                                        ParameterizationKind::kLabelSwap}) {
        FreeAngles free;
        // Keep sin(2x) away from zero so the rate is determined.
        for (Angle angle : free_angles(kind)) free[angle] = rng.uniform(0.2, 1.3);
        const RestrictedSolution sol = solve_restricted_rates(kind, special_parameterization(kind, free), p);
        const ReducedDynamics red = reduced_rates(kind, p);
        gap = std::max(gap, sol.residual);
        for (const auto& [angle, rate] : red.rates) gap = std::max(gap, std::abs(get(sol.rates, angle) - rate));
      }
    }
    out.push_back(check("reduced_rates_match_restricted_solver", gap, 1e-10));
  }
  {
    double gap = 0.0;
    const ModelParams p = rng.params();
    const BcsAngles a0 = rng.angles();
    const Occupations occ = rng.occupations();
    const std::vector<double> grid = uniform_grid(10.0, 1000);
    const Trajectory exact = integrate(a0, occ, p, grid, IntegrationMethod::kClosedForm);
    const Trajectory rk4 = integrate(a0, occ, p, grid, IntegrationMethod::kRk4);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const BcsAngles& x = exact.samples[k].angles;
      const BcsAngles& y = rk4.samples[k].angles;
      gap = std::max({gap, std::abs(x.theta - y.theta), std::abs(x.phi - y.phi),
                      std::abs(x.gamma - y.gamma), std::abs(x.xi - y.xi)});
    }
    out.push_back(check("rk4_matches_closed_form", gap, 1e-8));
  }

  // symmetry-analysis
  {
    double gap = 0.0;
    const int grid = 20;
    for (int i = 0; i < grid; ++i) {
      for (int j = 0; j < grid; ++j) {
        const double x = kTwoPi * i / grid, y = kTwoPi * j / grid;
        const OperatorExpansion pair = decompose(
            quasiparticle_op({y, 0, 0, x}, 1, true) * quasiparticle_op({y, 0, 0, x}, 1, false));
        const double s = std::sin(x), c = std::cos(x);
        gap = std::max({gap, complex_gap(pair[OperatorTerm::kNumberUp], c * c),
                        complex_gap(pair[OperatorTerm::kHoleDown], s * s),
                        complex_gap(pair[OperatorTerm::kPairCreate], std::polar(1.0, -y) * s * c),
                        complex_gap(pair[OperatorTerm::kPairAnnihilate], std::polar(1.0, y) * s * c)});
        const OperatorExpansion spin = decompose(
            quasiparticle_op({0, y, x, 0}, 1, true) * quasiparticle_op({0, y, x, 0}, 1, false));
        gap = std::max({gap, complex_gap(spin[OperatorTerm::kNumberUp], c * c),
                        complex_gap(spin[OperatorTerm::kNumberDown], s * s),
                        complex_gap(spin[OperatorTerm::kHopUpDown], std::polar(1.0, -y) * s * c),
                        complex_gap(spin[OperatorTerm::kHopDownUp], std::polar(1.0, y) * s * c)});
      }
    }
    out.push_back(check("decomposition_closed_forms", gap, 1e-12));
  }
  {
    int mismatches = 0;
    for (const KindSurvey& s : probe_all_kinds(ModelParams{})) {
      SymmetryClass expected = SymmetryClass::kRelabeling;
      bool evolving = false;
      switch (s.kind) {
        case ParameterizationKind::kPairing:
        case ParameterizationKind::kLabelSwap:
          expected = SymmetryClass::kPairingBreaking;
          evolving = true;
          break;
        case ParameterizationKind::kSpin:
          expected = SymmetryClass::kSpinBreaking;
          evolving = true;
          break;
        case ParameterizationKind::kIdentity: expected = SymmetryClass::kIdentity; break;
        default: break;
      }
      if (s.report.classification != expected || s.dynamics.evolving != evolving) ++mismatches;
    }
    out.push_back(check("symmetry_survey_matches_expected", mismatches, 0.0));
  }

  // classical-equivalence
  {
    double worst = 0.0;
    int failures = 0;
    for (int k = 0; k < std::min(n, 100); ++k) {
      EquivalenceOptions opt;
      opt.initial = rng.angles();
      opt.occupations = rng.occupations();
      const EquivalenceReport r = equivalence_check(rng.params(), opt);
      worst = std::max({worst, r.rate_deviation, r.action_drift, r.energy_drift});
      if (!r.passed) ++failures;
    }
    out.push_back(check("classical_equivalence", failures == 0 ? worst : 1.0, 1e-12));
  }
  return out;
}

}  // namespace mfao
