#include "mfao/classical.hpp"

#include <algorithm>
#include <cmath>

#include "mfao/errors.hpp"

namespace mfao {

namespace {

// Coefficients of the two actions; shared by both Hamiltonians.
struct Frequencies {
  double first;
  double second;
};

Frequencies frequencies(const ModelParams& p) {
  return {2.0 * p.gb_b + 2.0 * p.hbar_omega + p.u, 2.0 * p.gb_b};
}

}  // namespace

void ClassicalState::validate() const {
  if (!(std::abs(j1) <= 1.0) || !(std::abs(j2) <= 1.0)) {
    throw ArgumentError("actions j1, j2 must lie in [-1, 1]");
  }
  if (!std::isfinite(alpha1) || !std::isfinite(alpha2)) {
    throw ArgumentError("angles alpha1, alpha2 must be finite");
  }
}

double effective_hamiltonian(const ModelParams& p, double gamma, double xi) {
  const Frequencies w = frequencies(p);
  return w.first * xi + w.second * gamma;
}

double action_angle_hamiltonian(const ModelParams& p, const ClassicalState& s) {
  s.validate();
  const Frequencies w = frequencies(p);
  return w.first * s.j1 + w.second * s.j2;
}

ClassicalState to_action_angle(const BcsAngles& a) {
  return {a.theta, a.phi, std::cos(a.gamma), std::cos(a.xi)};
}

HamiltonRates hamilton_rates(const ModelParams& p) {
  // H is linear in the actions and independent of the angles.
  const Frequencies w = frequencies(p);
  return {w.first, w.second, 0.0, 0.0};
}

AngleRates effective_hamilton_rates(const ModelParams& p) {
  const Frequencies w = frequencies(p);
  AngleRates r;
  r.d_phi = w.second;
  r.d_gamma = 0.0;
  r.d_theta = w.first;
  r.d_xi = 0.0;
  return r;
}

EquivalenceReport equivalence_check(const ModelParams& p, const EquivalenceOptions& options) {
  p.validate();
  EquivalenceReport r;

  const HamiltonRates classical = hamilton_rates(p);
  const AngleRates quantum = closed_form_rates(p);
  r.rate_deviation = std::max({std::abs(classical.d_alpha1 - quantum.d_theta),
                               std::abs(classical.d_alpha2 - quantum.d_phi),
                               std::abs(classical.d_j1 - quantum.d_gamma),
                               std::abs(classical.d_j2 - quantum.d_xi)});

  const Trajectory traj = integrate(options.initial, options.occupations, p,
                                    uniform_grid(options.t_end, options.steps), options.method);
  // Fixed-step RK4 accumulates roundoff along the angles.
  r.slope_tolerance = options.method == IntegrationMethod::kRk4 ? 1e-8 : kEquivalenceTolerance;

  const ClassicalState start = to_action_angle(traj.samples.front().angles);
  const double h0 = action_angle_hamiltonian(p, start);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    const ClassicalState s = to_action_angle(traj.samples[k].angles);
    r.bound_violation = std::max({r.bound_violation, std::abs(s.j1) - 1.0, std::abs(s.j2) - 1.0});
    r.action_drift = std::max({r.action_drift, std::abs(s.j1 - start.j1), std::abs(s.j2 - start.j2)});
    const double e1 = std::abs(s.alpha1 - (start.alpha1 + classical.d_alpha1 * t)) / (1.0 + std::abs(s.alpha1));
    const double e2 = std::abs(s.alpha2 - (start.alpha2 + classical.d_alpha2 * t)) / (1.0 + std::abs(s.alpha2));
    r.slope_deviation = std::max({r.slope_deviation, e1, e2});
    if (r.bound_violation <= 0.0) {
      r.energy_drift = std::max(r.energy_drift, std::abs(action_angle_hamiltonian(p, s) - h0));
    }
  }

  r.passed = r.rate_deviation == 0.0 && r.action_drift <= kEquivalenceTolerance &&
             r.slope_deviation <= r.slope_tolerance && r.energy_drift <= kEquivalenceTolerance &&
             r.bound_violation <= 0.0;
  return r;
}

}  // namespace mfao
