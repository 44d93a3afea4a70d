#pragma once

// Particle-basis expansion of quasiparticle bilinears and classification of
// BCS transformations by the charges (particle number, spin-z) they break.

#include <array>
#include <map>
#include <string_view>
#include <vector>

#include "mfao/bogoliubov.hpp"
#include "mfao/fock.hpp"
#include "mfao/meanfield.hpp"

namespace mfao {

enum class OperatorTerm {
  kIdentity,        // 1
  kNumberUp,        // a1^dag a1
  kNumberDown,      // a2^dag a2
  kHoleDown,        // a2 a2^dag
  kHopUpDown,       // a1^dag a2
  kHopDownUp,       // a2^dag a1
  kPairCreate,      // a1^dag a2^dag
  kPairAnnihilate,  // a2 a1
};

inline constexpr int kOperatorTermCount = 8;

std::string_view term_name(OperatorTerm t);
FockOperator basis_operator(OperatorTerm t);

struct OperatorExpansion {
  std::array<Complex, kOperatorTermCount> coefficients{};

  Complex operator[](OperatorTerm t) const { return coefficients[static_cast<std::size_t>(t)]; }
  Complex& operator[](OperatorTerm t) { return coefficients[static_cast<std::size_t>(t)]; }

  FockOperator reassemble() const;
};

/// Expands `op` on the operator basis. The basis is overcomplete
/// (a2 a2^dag = 1 - a2^dag a2); the identity coefficient is always returned
/// as 0 and the remaining seven are unique.
/// Throws DecompositionError if the reconstruction residual exceeds 1e-9.
OperatorExpansion decompose(const FockOperator& op);

inline constexpr double kConservationTolerance = 1e-12;

enum class SymmetryClass { kIdentity, kPairingBreaking, kSpinBreaking, kRelabeling, kMixed };

std::string_view class_name(SymmetryClass c);

struct SymmetryReport {
  bool number_conserved = true;
  bool spin_conserved = true;
  double number_commutator_norm = 0.0;  // max |[N, lambda1^dag lambda1]|
  double spin_commutator_norm = 0.0;    // max |[Sz, lambda1^dag lambda1]|
  SymmetryClass classification = SymmetryClass::kIdentity;
};

SymmetryReport conservation_probe(const BcsAngles& a);

struct KindSurvey {
  ParameterizationKind kind;
  BcsAngles angles;
  SymmetryReport report;
  ReducedDynamics dynamics;
};

using SampleAngles = std::map<ParameterizationKind, FreeAngles>;

/// One representative point per special kind; the static kinds sit on their
/// static solution sets (gamma, xi = pi/2).
SampleAngles default_sample_angles();

/// Symmetry report and reduced dynamics for all six special kinds.
/// Throws ArgumentError if `samples` misses a kind.
std::vector<KindSurvey> probe_all_kinds(const ModelParams& p,
                                        const SampleAngles& samples = default_sample_angles());

}  // namespace mfao
