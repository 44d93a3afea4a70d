#include "mfao/fock.hpp"

#include <cmath>
#include <string>

#include "mfao/errors.hpp"

namespace mfao {

namespace {

FockOperator ket_bra(int row, int col, double sign = 1.0) {
  FockOperator m = FockOperator::Zero();
  m(row, col) = sign;
  return m;
}

void check_mode(int mode) {
  if (mode != 1 && mode != 2) {
    throw ArgumentError("mode index must be 1 or 2, got " + std::to_string(mode));
  }
}

FockOperator number_op(int mode) { return creation_op(mode) * annihilation_op(mode); }

}  // namespace

void ModelParams::validate() const {
  if (!std::isfinite(hbar_omega) || !std::isfinite(u) || !std::isfinite(gb_b)) {
    throw ArgumentError("model parameters must be finite");
  }
}

FockOperator creation_op(int mode) {
  check_mode(mode);
  if (mode == 1) {
    return ket_bra(kSpinUp, kVacuum) + ket_bra(kPair, kSpinDown);
  }
  // a2^dag a1^dag |0> = -a1^dag a2^dag |0>
  return ket_bra(kSpinDown, kVacuum) + ket_bra(kPair, kSpinUp, -1.0);
}

FockOperator annihilation_op(int mode) { return creation_op(mode).adjoint(); }

FockOperator hamiltonian(const ModelParams& p) {
  p.validate();
  const FockOperator n1 = number_op(1);
  const FockOperator n2 = number_op(2);
  return p.hbar_omega * (n1 + n2) + p.u * (n1 * n2) + p.gb_b * (n1 - n2);
}

std::array<Level, 4> spectrum(const ModelParams& p) {
  p.validate();
  return {{{0.0, kVacuum},
           {p.hbar_omega + p.gb_b, kSpinUp},
           {p.hbar_omega - p.gb_b, kSpinDown},
           {2.0 * p.hbar_omega + p.u, kPair}}};
}

StateVector make_state(Complex rho, Complex beta, Complex alpha, Complex tau) {
  StateVector s;
  s << rho, beta, alpha, tau;
  const double norm = s.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw ArgumentError("state amplitudes must be finite and not all zero");
  }
  return s / norm;
}

EvolvedState evolve_exact(const StateVector& s, const ModelParams& p, double t) {
  if (!std::isfinite(t)) {
    throw ArgumentError("evolution time must be finite");
  }
  const double norm = s.norm();
  if (!std::isfinite(norm) || norm == 0.0) {
    throw ArgumentError("state must be finite and nonzero");
  }
  EvolvedState out;
  out.state = s;
  if (std::abs(norm - 1.0) > 1e-12) {
    out.state /= norm;
    out.renormalized = true;
  }
  for (const Level& level : spectrum(p)) {
    out.state(level.state) *= std::polar(1.0, -level.energy * t);
  }
  return out;
}

FockOperator observable(Observable kind) {
  switch (kind) {
    case Observable::kNumber:
      return number_op(1) + number_op(2);
    case Observable::kSpinZ:
      return number_op(1) - number_op(2);
    case Observable::kPairCreate:
      return creation_op(1) * creation_op(2);
    case Observable::kPairAnnihilate:
      return annihilation_op(2) * annihilation_op(1);
  }
  throw ArgumentError("unknown observable kind");
}

Observable observable_from_name(std::string_view name) {
  if (name == "number") return Observable::kNumber;
  if (name == "spin_z") return Observable::kSpinZ;
  if (name == "pair_create") return Observable::kPairCreate;
  if (name == "pair_annihilate") return Observable::kPairAnnihilate;
  throw ArgumentError("unknown observable '" + std::string(name) + "'");
}

Complex expectation(const FockOperator& op, const StateVector& s) {
  return s.dot(op * s);  // dot() conjugates the left operand
}

FockOperator anticommutator(const FockOperator& a, const FockOperator& b) {
  return a * b + b * a;
}

FockOperator commutator(const FockOperator& a, const FockOperator& b) {
  return a * b - b * a;
}

}  // namespace mfao
