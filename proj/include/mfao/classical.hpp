#pragma once

// Classical reading of the mean-field flow: two unit magnetic moments
// precessing about the field. Action-angle variables
//   alpha1 = theta, j1 = cos(gamma),  alpha2 = phi, j2 = cos(xi)
// and H(j1, j2) = (2 gB + 2 hw + U) j1 + 2 gB j2.

#include "mfao/bogoliubov.hpp"
#include "mfao/fock.hpp"
#include "mfao/meanfield.hpp"

namespace mfao {

struct ClassicalState {
  double alpha1 = 0.0;  // precession angle of moment 1 (= theta)
  double alpha2 = 0.0;  // precession angle of moment 2 (= phi)
  double j1 = 1.0;      // projection of moment 1 on the field (= cos gamma)
  double j2 = 1.0;      // projection of moment 2 on the field (= cos xi)

  /// Throws ArgumentError unless -1 <= j1, j2 <= 1.
  void validate() const;
};

/// H_ef(gamma, xi) = (2 gB + 2 hw + U) xi + 2 gB gamma.
double effective_hamiltonian(const ModelParams& p, double gamma, double xi);

/// H(j1, j2) = (2 gB + 2 hw + U) j1 + 2 gB j2.
double action_angle_hamiltonian(const ModelParams& p, const ClassicalState& s);

ClassicalState to_action_angle(const BcsAngles& a);

struct HamiltonRates {
  double d_alpha1 = 0.0;
  double d_alpha2 = 0.0;
  double d_j1 = 0.0;
  double d_j2 = 0.0;
};

/// alpha_k' = dH/dj_k, j_k' = -dH/dalpha_k for the action-angle Hamiltonian.
HamiltonRates hamilton_rates(const ModelParams& p);

/// Rates generated by H_ef with the pairs (phi, gamma) and (theta, xi):
/// phi' = dH_ef/dgamma, gamma' = -dH_ef/dphi, theta' = dH_ef/dxi, xi' = -dH_ef/dtheta.
AngleRates effective_hamilton_rates(const ModelParams& p);

struct EquivalenceOptions {
  BcsAngles initial{0.3, -0.2, 0.9, 1.3};
  Occupations occupations{0.25, 0.5};
  double t_end = 10.0;
  int steps = 200;
  IntegrationMethod method = IntegrationMethod::kClosedForm;
};

struct EquivalenceReport {
  bool passed = false;
  double rate_deviation = 0.0;    // hamilton_rates vs closed_form_rates
  double action_drift = 0.0;      // max |j(t) - j(0)| along the trajectory
  double slope_deviation = 0.0;   // max |alpha(t) - alpha(0) - alpha' t|, relative
  double energy_drift = 0.0;      // max |H(t) - H(0)|
  double bound_violation = 0.0;   // max(0, |j| - 1)
  double slope_tolerance = 0.0;
};

inline constexpr double kEquivalenceTolerance = 1e-12;

EquivalenceReport equivalence_check(const ModelParams& p, const EquivalenceOptions& options = {});

}  // namespace mfao
