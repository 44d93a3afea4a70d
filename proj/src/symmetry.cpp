#include "mfao/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mfao/errors.hpp"

namespace mfao {

std::string_view term_name(OperatorTerm t) {
  switch (t) {
    case OperatorTerm::kIdentity: return "1";
    case OperatorTerm::kNumberUp: return "a1+a1";
    case OperatorTerm::kNumberDown: return "a2+a2";
    case OperatorTerm::kHoleDown: return "a2a2+";
    case OperatorTerm::kHopUpDown: return "a1+a2";
    case OperatorTerm::kHopDownUp: return "a2+a1";
    case OperatorTerm::kPairCreate: return "a1+a2+";
    case OperatorTerm::kPairAnnihilate: return "a2a1";
  }
  return "?";
}

FockOperator basis_operator(OperatorTerm t) {
  switch (t) {
    case OperatorTerm::kIdentity: return FockOperator::Identity();
    case OperatorTerm::kNumberUp: return creation_op(1) * annihilation_op(1);
    case OperatorTerm::kNumberDown: return creation_op(2) * annihilation_op(2);
    case OperatorTerm::kHoleDown: return annihilation_op(2) * creation_op(2);
    case OperatorTerm::kHopUpDown: return creation_op(1) * annihilation_op(2);
    case OperatorTerm::kHopDownUp: return creation_op(2) * annihilation_op(1);
    case OperatorTerm::kPairCreate: return creation_op(1) * creation_op(2);
    case OperatorTerm::kPairAnnihilate: return annihilation_op(2) * annihilation_op(1);
  }
  throw ArgumentError("unknown operator term");
}

FockOperator OperatorExpansion::reassemble() const {
  FockOperator m = FockOperator::Zero();
  for (int k = 0; k < kOperatorTermCount; ++k) {
    m += coefficients[static_cast<std::size_t>(k)] * basis_operator(static_cast<OperatorTerm>(k));
  }
  return m;
}

OperatorExpansion decompose(const FockOperator& op) {
  // Columns: vectorized basis operators, identity excluded.
  constexpr int kIndependent = kOperatorTermCount - 1;
  Eigen::Matrix<Complex, 16, kIndependent> design;
  for (int k = 0; k < kIndependent; ++k) {
    const FockOperator b = basis_operator(static_cast<OperatorTerm>(k + 1));
    design.col(k) = Eigen::Map<const Eigen::Matrix<Complex, 16, 1>>(b.data());
  }
  const Eigen::Matrix<Complex, 16, 1> target = Eigen::Map<const Eigen::Matrix<Complex, 16, 1>>(op.data());
  const Eigen::Matrix<Complex, kIndependent, 1> x = design.colPivHouseholderQr().solve(target);

  OperatorExpansion out;
  out[OperatorTerm::kIdentity] = 0.0;
  for (int k = 0; k < kIndependent; ++k) out.coefficients[static_cast<std::size_t>(k + 1)] = x(k);

  const double residual = max_abs(out.reassemble() - op);
  if (residual > 1e-9) {
    throw DecompositionError("operator lies outside the bilinear span (residual " +
                             std::to_string(residual) + ")");
  }
  return out;
}

std::string_view class_name(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kIdentity: return "Identity";
    case SymmetryClass::kPairingBreaking: return "PairingBreaking";
    case SymmetryClass::kSpinBreaking: return "SpinBreaking";
    case SymmetryClass::kRelabeling: return "Relabeling";
    case SymmetryClass::kMixed: return "Mixed";
  }
  return "?";
}

SymmetryReport conservation_probe(const BcsAngles& a) {
  a.validate();
  const FockOperator probe = quasiparticle_op(a, 1, true) * quasiparticle_op(a, 1, false);

  SymmetryReport r;
  r.number_commutator_norm = max_abs(commutator(observable(Observable::kNumber), probe));
  r.spin_commutator_norm = max_abs(commutator(observable(Observable::kSpinZ), probe));
  r.number_conserved = r.number_commutator_norm <= kConservationTolerance;
  r.spin_conserved = r.spin_commutator_norm <= kConservationTolerance;

  if (r.number_conserved && r.spin_conserved) {
    const Transform4 t = assemble_transform(build_blocks(a));
    const bool identity = max_abs(t - Transform4::Identity()) <= kConservationTolerance;
    r.classification = identity ? SymmetryClass::kIdentity : SymmetryClass::kRelabeling;
  } else if (r.spin_conserved) {
    r.classification = SymmetryClass::kPairingBreaking;
  } else if (r.number_conserved) {
    r.classification = SymmetryClass::kSpinBreaking;
  } else {
    r.classification = SymmetryClass::kMixed;
  }
  return r;
}

SampleAngles default_sample_angles() {
  constexpr double kQuarter = std::numbers::pi / 4.0;
  constexpr double kHalf = std::numbers::pi / 2.0;
  return {
      {ParameterizationKind::kPairing, {{Angle::kXi, kQuarter}, {Angle::kTheta, 0.3}}},
      {ParameterizationKind::kSpin, {{Angle::kGamma, kQuarter}, {Angle::kPhi, 0.3}}},
      {ParameterizationKind::kIdentity, {{Angle::kTheta, 0.3}, {Angle::kPhi, 0.7}}},
      {ParameterizationKind::kOrthogonal, {{Angle::kGamma, kHalf}, {Angle::kTheta, 0.3}}},
      {ParameterizationKind::kStaticPair, {{Angle::kGamma, kHalf}, {Angle::kXi, kHalf}}},
      {ParameterizationKind::kLabelSwap, {{Angle::kXi, kQuarter}, {Angle::kPhi, 0.3}}},
  };
}

std::vector<KindSurvey> probe_all_kinds(const ModelParams& p, const SampleAngles& samples) {
  p.validate();
  std::vector<KindSurvey> out;
  for (ParameterizationKind kind : kSpecialKinds) {
    auto it = samples.find(kind);
    if (it == samples.end()) {
      throw ArgumentError("no sample angles for " + std::string(kind_name(kind)));
    }
    const BcsAngles angles = special_parameterization(kind, it->second);
    out.push_back({kind, angles, conservation_probe(angles), reduced_rates(kind, p)});
  }
  return out;
}

}  // namespace mfao
