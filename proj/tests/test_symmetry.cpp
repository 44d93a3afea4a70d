#include <cmath>

#include "doctest.h"
#include "mfao/errors.hpp"
#include "mfao/symmetry.hpp"
#include "oracles.hpp"

using namespace mfao;

namespace {

FockOperator number_up(const BcsAngles& a) {
  return oracle::quasi_create(a, 1) * oracle::quasi_annihilate(a, 1);
}

double gap(Complex x, Complex y) { return std::abs(x - y); }

}  // namespace

TEST_CASE("basis operators") {
  CHECK(oracle::max_abs(basis_operator(OperatorTerm::kIdentity) - FockOperator::Identity()) == 0.0);
  CHECK(oracle::max_abs(basis_operator(OperatorTerm::kHoleDown) - oracle::annihilate(2) * oracle::create(2)) == 0.0);
  CHECK(oracle::max_abs(basis_operator(OperatorTerm::kHopUpDown) - oracle::create(1) * oracle::annihilate(2)) == 0.0);
  CHECK(oracle::max_abs(basis_operator(OperatorTerm::kPairAnnihilate) - oracle::annihilate(2) * oracle::annihilate(1)) ==
        0.0);
}

TEST_CASE("pairing number operator expands with pair terms") {
  const int grid = 20;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double xi = 2 * oracle::kPi * i / grid, theta = 2 * oracle::kPi * j / grid;
      const OperatorExpansion e = decompose(number_up({theta, 0, 0, xi}));
      const double c = std::cos(xi), s = std::sin(xi);
      REQUIRE(gap(e[OperatorTerm::kNumberUp], c * c) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kHoleDown], s * s) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kPairCreate], std::exp(Complex(0, -theta)) * s * c) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kPairAnnihilate], std::exp(Complex(0, theta)) * s * c) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kNumberDown]) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kHopUpDown]) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kHopDownUp]) <= 1e-12);
      REQUIRE(std::abs(std::abs(e[OperatorTerm::kPairCreate]) - std::abs(s * c)) <= 1e-12);
    }
  }
}

TEST_CASE("spin number operator expands with hopping terms") {
  const int grid = 20;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double gamma = 2 * oracle::kPi * i / grid, phi = 2 * oracle::kPi * j / grid;
      const OperatorExpansion e = decompose(number_up({0, phi, gamma, 0}));
      const double c = std::cos(gamma), s = std::sin(gamma);
      REQUIRE(gap(e[OperatorTerm::kNumberUp], c * c) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kNumberDown], s * s) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kHopUpDown], std::exp(Complex(0, -phi)) * s * c) <= 1e-12);
      REQUIRE(gap(e[OperatorTerm::kHopDownUp], std::exp(Complex(0, phi)) * s * c) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kHoleDown]) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kPairCreate]) <= 1e-12);
      REQUIRE(std::abs(e[OperatorTerm::kPairAnnihilate]) <= 1e-12);
    }
  }
}

TEST_CASE("decomposition reassembles the operator") {
  oracle::Draws draws(31);
  for (int k = 0; k < 200; ++k) {
    const FockOperator op = number_up(draws.angles());
    const OperatorExpansion e = decompose(op);
    CHECK(e[OperatorTerm::kIdentity] == Complex(0.0));
    CHECK(oracle::max_abs(e.reassemble() - op) <= 1e-12);
  }
}

TEST_CASE("operators outside the span are rejected") {
  CHECK_THROWS_AS(decompose(oracle::create(1)), DecompositionError);
  // n1 n2 is even but not a single bilinear
  CHECK_THROWS_AS(decompose(oracle::create(1) * oracle::annihilate(1) * oracle::create(2) * oracle::annihilate(2)),
                  DecompositionError);
}

TEST_CASE("conservation probe") {
  const SymmetryReport pairing = conservation_probe({0.4, 0, 0, 0.7});
  CHECK_FALSE(pairing.number_conserved);
  CHECK(pairing.spin_conserved);
  CHECK(pairing.classification == SymmetryClass::kPairingBreaking);

  const SymmetryReport spin = conservation_probe({0, 0.4, 0.7, 0});
  CHECK(spin.number_conserved);
  CHECK_FALSE(spin.spin_conserved);
  CHECK(spin.classification == SymmetryClass::kSpinBreaking);

  CHECK(conservation_probe({0.3, 0.7, 0, 0}).classification == SymmetryClass::kIdentity);
  CHECK(conservation_probe({0.3, 0, oracle::kPi / 2, 0}).classification == SymmetryClass::kRelabeling);
  CHECK(conservation_probe({0.4, 0.5, 0.6, 0.7}).classification == SymmetryClass::kMixed);
}

TEST_CASE("survey of the special parameterizations") {
  const auto survey = probe_all_kinds(ModelParams{});
  REQUIRE(survey.size() == 6);
  for (const KindSurvey& s : survey) {
    CAPTURE(kind_name(s.kind));
    switch (s.kind) {
      case ParameterizationKind::kPairing:
        CHECK(s.report.classification == SymmetryClass::kPairingBreaking);
        CHECK(s.dynamics.evolving);
        break;
      case ParameterizationKind::kSpin:
        CHECK(s.report.classification == SymmetryClass::kSpinBreaking);
        CHECK(s.dynamics.evolving);
        break;
      case ParameterizationKind::kLabelSwap:
        CHECK_FALSE(s.report.number_conserved);
        CHECK(s.report.classification == SymmetryClass::kPairingBreaking);
        CHECK(s.dynamics.evolving);
        break;
      default:
        CHECK(s.report.number_conserved);
        CHECK(s.report.spin_conserved);
        CHECK_FALSE(s.dynamics.evolving);
        break;
    }
  }
  SampleAngles partial = default_sample_angles();
  partial.erase(ParameterizationKind::kSpin);
  CHECK_THROWS_AS(probe_all_kinds(ModelParams{}, partial), ArgumentError);
}

TEST_CASE("label swap pairs like the pairing kind with theta replaced by -phi") {
  const double xi = 0.6, phi = 0.9;
  const BcsAngles swap = special_parameterization(ParameterizationKind::kLabelSwap, {{Angle::kXi, xi}, {Angle::kPhi, phi}});
  const OperatorExpansion e = decompose(number_up(swap));
  const OperatorExpansion p = decompose(number_up({-phi, 0, 0, xi}));
  for (int k = 0; k < kOperatorTermCount; ++k) {
    const auto t = static_cast<OperatorTerm>(k);
    CHECK(gap(e[t], p[t]) <= 1e-12);
  }
}
