#pragma once

// Exact representation of the two-mode (spin up / spin down) fermionic
// anharmonic oscillator in a constant magnetic field on its 4-dimensional
// Fock space.
//
// Basis ordering, used by every matrix in the library:
//   0 = |0>              vacuum
//   1 = a1^dag |0>       one fermion, spin up
//   2 = a2^dag |0>       one fermion, spin down
//   3 = a1^dag a2^dag |0> pair
//
// Sign convention: a1^dag = |1><0| + |3><2|,  a2^dag = |2><0| - |3><1|.
// Units: hbar = 1.

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace mfao {

using Complex = std::complex<double>;
using FockOperator = Eigen::Matrix4cd;
using StateVector = Eigen::Vector4cd;

enum FockIndex : int { kVacuum = 0, kSpinUp = 1, kSpinDown = 2, kPair = 3 };

struct ModelParams {
  double hbar_omega = 1.0;  // single-particle level
  double u = 0.5;           // pairing interaction
  double gb_b = 0.25;       // magnetic coupling times field, g_B * B

  /// Throws ArgumentError if any field is not finite.
  void validate() const;
};

FockOperator annihilation_op(int mode);
FockOperator creation_op(int mode);

/// H = hw (n1 + n2) + U n1 n2 + gB (n1 - n2), built from operator products.
FockOperator hamiltonian(const ModelParams& p);

struct Level {
  double energy;
  FockIndex state;
};

/// Closed-form eigenpairs, in basis order (not sorted by energy).
std::array<Level, 4> spectrum(const ModelParams& p);

struct EvolvedState {
  StateVector state;
  bool renormalized = false;  // input had |norm - 1| > 1e-12 and was rescaled
};

/// Exact propagation: amplitude k picks up exp(-i E_k t).
/// Throws ArgumentError for a zero or non-finite state, or non-finite t.
EvolvedState evolve_exact(const StateVector& s, const ModelParams& p, double t);

/// Normalized state (rho, beta, alpha, tau) over the basis; the raw
/// amplitudes need not be normalized.
StateVector make_state(Complex rho, Complex beta, Complex alpha, Complex tau);

enum class Observable { kNumber, kSpinZ, kPairCreate, kPairAnnihilate };

/// N = n1 + n2, Sz = n1 - n2 (integer eigenvalues, hbar/2 folded in),
/// a1^dag a2^dag, a2 a1.
FockOperator observable(Observable kind);
Observable observable_from_name(std::string_view name);

Complex expectation(const FockOperator& op, const StateVector& s);

/// Anticommutator {a, b} = ab + ba.
FockOperator anticommutator(const FockOperator& a, const FockOperator& b);
FockOperator commutator(const FockOperator& a, const FockOperator& b);

/// Largest entry magnitude (0 for an empty matrix).
template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace mfao
