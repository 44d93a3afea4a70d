#pragma once

// Four-angle BCS (Bogoliubov) transformation of the two fermion modes.
//
//   Omega2 = [[ cg cx,          -e^{-i phi} sg cx ],
//             [ e^{i phi} sg cx, cg cx            ]]
//   Z2     = [[ e^{i theta} sg sx,           e^{i(theta-phi)} cg sx    ],
//             [ -e^{i(theta-phi)} cg sx,     e^{i(theta-2phi)} sg sx   ]]
//
// with cg = cos(gamma), sx = sin(xi) and so on. Quasiparticle creation
// operators are
//
//   lambda_i^dag = sum_j ( w_ji a_j^dag - z_ji a_j ).
//
// The minus sign on the particle-hole part fixes the phase of the pairing
// terms: at phi = gamma = 0,
//   lambda_1^dag = cos(xi) a1^dag + e^{i theta} sin(xi) a2.
// Flipping it is also unitary and is equivalent to theta -> theta + pi.

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "mfao/fock.hpp"

namespace mfao {

using Block2 = Eigen::Matrix2cd;
using Transform4 = Eigen::Matrix4cd;

/// Angles are unrestricted reals; they grow linearly under the mean-field flow.
struct BcsAngles {
  double theta = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
  double xi = 0.0;

  void validate() const;
};

enum class Angle { kTheta, kPhi, kGamma, kXi };

std::string_view angle_name(Angle a);
double get(const BcsAngles& a, Angle which);
void set(BcsAngles& a, Angle which, double value);

struct TransformBlocks {
  Block2 omega;
  Block2 z;
};

TransformBlocks build_blocks(const BcsAngles& a);

/// 4x4 matrix taking (a1, a2, a1^dag, a2^dag) to
/// (lambda1, lambda2, lambda1^dag, lambda2^dag):
///
///   [ conj(W)^T    -conj(Z)^T ]
///   [ -Z^T          W^T       ]
///
/// Row k lists the coefficients of the k-th quasiparticle operator.
Transform4 assemble_transform(const TransformBlocks& b);

/// max |m m^dag - I|.
double unitarity_residual(const Transform4& m);

/// lambda_mode (daggered=false) or lambda_mode^dag in the Fock representation.
FockOperator quasiparticle_op(const BcsAngles& a, int mode, bool daggered);

/// Particular parameterizations. Each pins two angles to zero.
enum class ParameterizationKind {
  kGeneral,
  kPairing,     // phi = gamma = 0 (Bogoliubov channel)
  kSpin,        // xi = theta = 0 (Hartree-Fock channel)
  kIdentity,    // xi = gamma = 0
  kOrthogonal,  // xi = phi = 0
  kStaticPair,  // phi = theta = 0
  kLabelSwap,   // gamma = theta = 0
};

inline constexpr std::array<ParameterizationKind, 6> kSpecialKinds = {
    ParameterizationKind::kPairing,    ParameterizationKind::kSpin,
    ParameterizationKind::kIdentity,   ParameterizationKind::kOrthogonal,
    ParameterizationKind::kStaticPair, ParameterizationKind::kLabelSwap};

std::string_view kind_name(ParameterizationKind kind);
ParameterizationKind kind_from_name(std::string_view name);

/// Angles pinned to zero by `kind` (empty for General).
std::vector<Angle> pinned_angles(ParameterizationKind kind);
std::vector<Angle> free_angles(ParameterizationKind kind);

using FreeAngles = std::map<Angle, double>;

/// Throws ArgumentError if `free` names a pinned angle or misses a free one.
BcsAngles special_parameterization(ParameterizationKind kind, const FreeAngles& free);

}  // namespace mfao
