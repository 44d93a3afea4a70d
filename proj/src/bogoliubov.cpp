#include "mfao/bogoliubov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfao/errors.hpp"

namespace mfao {

void BcsAngles::validate() const {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(gamma) ||
      !std::isfinite(xi)) {
    throw ArgumentError("BCS angles must be finite");
  }
}

std::string_view angle_name(Angle a) {
  switch (a) {
    case Angle::kTheta: return "theta";
    case Angle::kPhi: return "phi";
    case Angle::kGamma: return "gamma";
    case Angle::kXi: return "xi";
  }
  return "?";
}

double get(const BcsAngles& a, Angle which) {
  switch (which) {
    case Angle::kTheta: return a.theta;
    case Angle::kPhi: return a.phi;
    case Angle::kGamma: return a.gamma;
    case Angle::kXi: return a.xi;
  }
  return 0.0;
}

void set(BcsAngles& a, Angle which, double value) {
  switch (which) {
    case Angle::kTheta: a.theta = value; break;
    case Angle::kPhi: a.phi = value; break;
    case Angle::kGamma: a.gamma = value; break;
    case Angle::kXi: a.xi = value; break;
  }
}

TransformBlocks build_blocks(const BcsAngles& a) {
  const double cg = std::cos(a.gamma), sg = std::sin(a.gamma);
  const double cx = std::cos(a.xi), sx = std::sin(a.xi);
  auto phase = [](double angle) { return std::polar(1.0, angle); };

  TransformBlocks b;
  b.omega << cg * cx, -phase(-a.phi) * sg * cx,
             phase(a.phi) * sg * cx, cg * cx;
  b.z << phase(a.theta) * sg * sx, phase(a.theta - a.phi) * cg * sx,
         -phase(a.theta - a.phi) * cg * sx, phase(a.theta - 2.0 * a.phi) * sg * sx;
  return b;
}

Transform4 assemble_transform(const TransformBlocks& b) {
  Transform4 m;
  m.topLeftCorner<2, 2>() = b.omega.adjoint();
  m.topRightCorner<2, 2>() = -b.z.adjoint();
  m.bottomLeftCorner<2, 2>() = -b.z.transpose();
  m.bottomRightCorner<2, 2>() = b.omega.transpose();
  return m;
}

double unitarity_residual(const Transform4& m) {
  return max_abs(m * m.adjoint() - Transform4::Identity());
}

FockOperator quasiparticle_op(const BcsAngles& a, int mode, bool daggered) {
  if (mode != 1 && mode != 2) {
    throw ArgumentError("mode index must be 1 or 2, got " + std::to_string(mode));
  }
  const Transform4 t = assemble_transform(build_blocks(a));
  const std::array<FockOperator, 4> particle_ops = {annihilation_op(1), annihilation_op(2),
                                                    creation_op(1), creation_op(2)};
  const int row = (mode - 1) + (daggered ? 2 : 0);
  FockOperator op = FockOperator::Zero();
  for (int k = 0; k < 4; ++k) {
    op += t(row, k) * particle_ops[k];
  }
  return op;
}

std::string_view kind_name(ParameterizationKind kind) {
  switch (kind) {
    case ParameterizationKind::kGeneral: return "General";
    case ParameterizationKind::kPairing: return "Pairing";
    case ParameterizationKind::kSpin: return "Spin";
    case ParameterizationKind::kIdentity: return "Identity";
    case ParameterizationKind::kOrthogonal: return "Orthogonal";
    case ParameterizationKind::kStaticPair: return "StaticPair";
    case ParameterizationKind::kLabelSwap: return "LabelSwap";
  }
  return "?";
}

ParameterizationKind kind_from_name(std::string_view name) {
  if (name == "General") return ParameterizationKind::kGeneral;
  for (ParameterizationKind k : kSpecialKinds) {
    if (kind_name(k) == name) return k;
  }
  throw ArgumentError("unknown parameterization kind '" + std::string(name) + "'");
}

std::vector<Angle> pinned_angles(ParameterizationKind kind) {
  switch (kind) {
    case ParameterizationKind::kGeneral: return {};
    case ParameterizationKind::kPairing: return {Angle::kPhi, Angle::kGamma};
    case ParameterizationKind::kSpin: return {Angle::kTheta, Angle::kXi};
    case ParameterizationKind::kIdentity: return {Angle::kGamma, Angle::kXi};
    case ParameterizationKind::kOrthogonal: return {Angle::kPhi, Angle::kXi};
    case ParameterizationKind::kStaticPair: return {Angle::kTheta, Angle::kPhi};
    case ParameterizationKind::kLabelSwap: return {Angle::kTheta, Angle::kGamma};
  }
  return {};
}

std::vector<Angle> free_angles(ParameterizationKind kind) {
  const std::vector<Angle> pinned = pinned_angles(kind);
  std::vector<Angle> out;
  for (Angle a : {Angle::kTheta, Angle::kPhi, Angle::kGamma, Angle::kXi}) {
    if (std::find(pinned.begin(), pinned.end(), a) == pinned.end()) out.push_back(a);
  }
  return out;
}

BcsAngles special_parameterization(ParameterizationKind kind, const FreeAngles& free) {
  for (Angle a : pinned_angles(kind)) {
    if (free.count(a) != 0) {
      throw ArgumentError(std::string(kind_name(kind)) + " pins " +
                          std::string(angle_name(a)) + " to zero; it cannot be supplied");
    }
  }
  BcsAngles out;
  for (Angle a : free_angles(kind)) {
    auto it = free.find(a);
    if (it == free.end()) {
      throw ArgumentError(std::string(kind_name(kind)) + " requires a value for " +
                          std::string(angle_name(a)));
    }
    set(out, a, it->second);
  }
  out.validate();
  return out;
}

}  // namespace mfao
