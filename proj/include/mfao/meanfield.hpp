#pragma once

// Mean-field (TDHFB) dynamics of the BCS angles.
//
// The equations of motion are available three ways:
//   * eom_rhs_trace: -i Tr([O, H] F0) with O = lambda_i^dag lambda_j and
//     lambda_i lambda_j, evaluated with 4x4 matrices in the Fock space;
//   * eom_lhs_matrices: the time-derivative side, assembled from the angle
//     rates through dOmega/dt and dZ/dt;
//   * eom_residual_general: the two scalar channel equations written out
//     term by term, with every time derivative expanded by the chain rule.
// closed_form_rates is the solution: gamma, xi frozen; phi, theta linear.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mfao/bogoliubov.hpp"
#include "mfao/fock.hpp"

namespace mfao {

/// Quasiparticle occupations p_i = <lambda_i^dag lambda_i>, each in [0, 1].
struct Occupations {
  double p1 = 0.0;
  double p2 = 0.0;

  void validate() const;
};

bool operator==(const Occupations& a, const Occupations& b);

struct AngleRates {
  double d_theta = 0.0;
  double d_phi = 0.0;
  double d_gamma = 0.0;
  double d_xi = 0.0;
};

double get(const AngleRates& r, Angle which);
void set(AngleRates& r, Angle which, double value);

/// F0 = prod_i [ p_i lambda_i^dag lambda_i + (1 - p_i) lambda_i lambda_i^dag ].
FockOperator meanfield_density(const BcsAngles& a, const Occupations& occ);

/// A pair of 2x2 matrices indexed by quasiparticle labels (i, j).
struct EomMatrices {
  Block2 normal;     // lambda_i^dag lambda_j
  Block2 anomalous;  // lambda_i lambda_j
};

/// -i Tr([lambda_i^dag lambda_j, H] F0) and -i Tr([lambda_i lambda_j, H] F0).
EomMatrices eom_rhs_trace(const BcsAngles& a, const Occupations& occ, const ModelParams& p);

/// Derivative side of the matrix equations of motion:
///   P' + [P, Omega'^dag Omega + Z'^dag Z]
///   {P, Omega'^dag Z* + Z'^dag Omega*} - (Omega'^dag Z* + Z'^dag Omega*)
/// with P = diag(p1, p2) constant. Omega and Z are the blocks that enter the
/// quasiparticle operators (the particle-hole block with its sign).
/// Equals the transpose of eom_rhs_trace on a solution.
EomMatrices eom_lhs_matrices(const BcsAngles& a, const AngleRates& r, const Occupations& occ);

/// Time derivatives of the Omega2 and Z2 blocks along the given rates.
TransformBlocks block_rates(const BcsAngles& a, const AngleRates& r);

/// Values of the two scalar channel equations. The spin channel carries the
/// factor (p2 - p1) and is driven by gB; the pairing channel carries
/// (1 - p1 - p2) and is driven by 2 hw + U.
struct ChannelPair {
  Complex spin;
  Complex pairing;
};

/// Hamiltonian driving terms:
///   spin:    -i gB (p2 - p1) e^{-i phi} sin(2 gamma)
///   pairing:  i/2 (1 - p1 - p2) (2 hw + U) e^{-i(theta - phi)} sin(2 xi)
ChannelPair eom_driving_terms(const BcsAngles& a, const Occupations& occ, const ModelParams& p);

/// The driving terms as read off the trace matrices:
/// spin = -normal(2,1), pairing = anomalous(2,1) (1-based labels).
ChannelPair trace_channels(const EomMatrices& trace);

/// Driving term minus derivative term for each channel.
ChannelPair eom_residual_general(const BcsAngles& a, const AngleRates& r, const Occupations& occ,
                                 const ModelParams& p);

/// gamma' = xi' = 0, phi' = 2 gB, theta' = 2 gB + 2 hw + U.
AngleRates closed_form_rates(const ModelParams& p);

/// Reduced dynamics of a special parameterization.
struct ReducedDynamics {
  ParameterizationKind kind;
  std::vector<std::pair<Angle, double>> rates;  // free angles that obey a rate law
  std::vector<Angle> quantized;                 // static: angle = k pi / 2
  std::vector<Angle> arbitrary;                 // static: any value
  bool evolving = false;                        // a nontrivial effective dynamics exists

  std::optional<double> rate_of(Angle a) const;
};

/// Pairing:    xi' = 0, theta' = 2 hw + U
/// Spin:       gamma' = 0, phi' = 2 gB
/// Identity:   no dynamics
/// Orthogonal: gamma' = 0, gamma = k pi/2, theta arbitrary
/// StaticPair: gamma' = xi' = 0, gamma = k pi/2, xi = k pi/2
/// LabelSwap:  xi' = 0, phi' = -(2 hw + U)   (theta -> -phi relative to Pairing)
/// Throws ArgumentError for General; use closed_form_rates.
ReducedDynamics reduced_rates(ParameterizationKind kind, const ModelParams& p);

/// Least-squares solve of the channel equations (occupation factors divided
/// out) for the rates of the free angles, pinned angles held at zero rate.
struct RestrictedSolution {
  AngleRates rates;
  double residual = 0.0;  // max |driving - derivative| over both channels
  int rank = 0;           // rank of the rate-coefficient system
};

RestrictedSolution solve_restricted_rates(ParameterizationKind kind, const BcsAngles& a,
                                          const ModelParams& p);

enum class IntegrationMethod { kClosedForm, kRk4 };

std::string_view method_name(IntegrationMethod m);
IntegrationMethod method_from_name(std::string_view name);

struct TrajectorySample {
  BcsAngles angles;
  Occupations occupations;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<TrajectorySample> samples;
  IntegrationMethod method = IntegrationMethod::kClosedForm;
};

struct IntegrateOptions {
  // RK4 substeps per unit time; each grid interval gets at least one.
  double rk4_steps_per_unit = 1000.0;
};

/// t_k = t_end * k / steps, k = 0..steps. t_end = 0 gives the single point {0}.
std::vector<double> uniform_grid(double t_end, int steps);

/// Throws ArgumentError for an empty grid, a grid not starting at 0, or
/// non-increasing times.
Trajectory integrate(const BcsAngles& a0, const Occupations& occ, const ModelParams& p,
                     const std::vector<double>& times, IntegrationMethod method,
                     const IntegrateOptions& options = {});

}  // namespace mfao
