#include <cmath>

#include "doctest.h"
#include "mfao/errors.hpp"
#include "mfao/meanfield.hpp"
#include "oracles.hpp"

using namespace mfao;

namespace {

// Printed left-hand-side prefactors of the two channel equations.
Complex spin_prefactor(const BcsAngles& a, const Occupations& o, const ModelParams& p) {
  return Complex(0, -1) * p.gb_b * (o.p2 - o.p1) * std::exp(Complex(0, -a.phi)) * std::sin(2 * a.gamma);
}

Complex pairing_prefactor(const BcsAngles& a, const Occupations& o, const ModelParams& p) {
  return Complex(0, 0.5) * (1 - o.p1 - o.p2) * (2 * p.hbar_omega + p.u) *
         std::exp(Complex(0, -(a.theta - a.phi))) * std::sin(2 * a.xi);
}

BcsAngles advance(const BcsAngles& a, const AngleRates& r, double h) {
  return {a.theta + h * r.d_theta, a.phi + h * r.d_phi, a.gamma + h * r.d_gamma, a.xi + h * r.d_xi};
}

}  // namespace

TEST_CASE("mean-field density is a normalized product state") {
  oracle::Draws draws(21);
  for (int k = 0; k < 200; ++k) {
    const BcsAngles a = draws.angles();
    const Occupations o = draws.occupations();
    const FockOperator f = meanfield_density(a, o);
    CHECK(oracle::max_abs(f - oracle::density(a, o.p1, o.p2)) <= 1e-14);
    CHECK(std::abs(f.trace() - 1.0) <= 1e-12);
    CHECK(oracle::max_abs(f - f.adjoint()) <= 1e-14);
    const Complex n1 = (f * quasiparticle_op(a, 1, true) * quasiparticle_op(a, 1, false)).trace();
    const Complex n2 = (f * quasiparticle_op(a, 2, true) * quasiparticle_op(a, 2, false)).trace();
    CHECK(std::abs(n1 - o.p1) <= 1e-12);
    CHECK(std::abs(n2 - o.p2) <= 1e-12);
  }
  CHECK_THROWS_AS(meanfield_density(BcsAngles{}, Occupations{1.5, 0}), ArgumentError);
}

TEST_CASE("trace matrices agree with the oracle") {
  oracle::Draws draws(22);
  for (int k = 0; k < 100; ++k) {
    const BcsAngles a = draws.angles();
    const Occupations o = draws.occupations();
    const ModelParams p = draws.params();
    const EomMatrices t = eom_rhs_trace(a, o, p);
    const FockOperator h = oracle::hamiltonian(p), f0 = oracle::density(a, o.p1, o.p2);
    for (int i = 1; i <= 2; ++i) {
      for (int j = 1; j <= 2; ++j) {
        const Complex normal = oracle::trace_rate(oracle::quasi_create(a, i) * oracle::quasi_annihilate(a, j), h, f0);
        const Complex anomalous =
            oracle::trace_rate(oracle::quasi_annihilate(a, i) * oracle::quasi_annihilate(a, j), h, f0);
        CHECK(std::abs(t.normal(i - 1, j - 1) - normal) <= 1e-12);
        CHECK(std::abs(t.anomalous(i - 1, j - 1) - anomalous) <= 1e-12);
      }
    }
  }
}

TEST_CASE("occupations are stationary") {
  oracle::Draws draws(23);
  for (int k = 0; k < 1000; ++k) {
    const EomMatrices t = eom_rhs_trace(draws.angles(), draws.occupations(), draws.params());
    REQUIRE(std::abs(t.normal(0, 0)) <= 1e-12);
    REQUIRE(std::abs(t.normal(1, 1)) <= 1e-12);
  }
}

TEST_CASE("trace channels reproduce the printed prefactors") {
  oracle::Draws draws(24);
  for (int k = 0; k < 300; ++k) {
    const Occupations o = draws.occupations();
    const ModelParams p = draws.params();
    const BcsAngles general = draws.angles();
    const BcsAngles pairing = special_parameterization(
        ParameterizationKind::kPairing, {{Angle::kTheta, draws.uniform(-7, 7)}, {Angle::kXi, draws.uniform(-7, 7)}});
    const BcsAngles spin = special_parameterization(
        ParameterizationKind::kSpin, {{Angle::kPhi, draws.uniform(-7, 7)}, {Angle::kGamma, draws.uniform(-7, 7)}});
    for (const BcsAngles& a : {general, pairing, spin}) {
      const ChannelPair c = trace_channels(eom_rhs_trace(a, o, p));
      CHECK(std::abs(c.spin - spin_prefactor(a, o, p)) <= 1e-10);
      CHECK(std::abs(c.pairing - pairing_prefactor(a, o, p)) <= 1e-10);
      const ChannelPair d = eom_driving_terms(a, o, p);
      CHECK(std::abs(d.spin - spin_prefactor(a, o, p)) <= 1e-12);
      CHECK(std::abs(d.pairing - pairing_prefactor(a, o, p)) <= 1e-12);
    }
  }
}

TEST_CASE("closed-form rates") {
  const AngleRates r = closed_form_rates({1.0, 0.5, 0.25});
  CHECK(r.d_theta == 3.0);
  CHECK(r.d_phi == 0.5);
  CHECK(r.d_gamma == 0.0);
  CHECK(r.d_xi == 0.0);
}

TEST_CASE("closed-form rates solve the channel equations") {
  oracle::Draws draws(25);
  for (int k = 0; k < 1000; ++k) {
    const BcsAngles a = draws.angles();
    const Occupations o = draws.occupations();
    const ModelParams p = draws.params();
    const ChannelPair res = eom_residual_general(a, closed_form_rates(p), o, p);
    REQUIRE(std::abs(res.spin) <= 1e-10);
    REQUIRE(std::abs(res.pairing) <= 1e-10);
  }
}

TEST_CASE("perturbed rates leave a residual") {
  const BcsAngles a{0.4, 0.9, 0.6, 0.3};
  const Occupations o{0.1, 0.6};
  const ModelParams p{1.0, 0.5, 0.25};
  for (Angle which : {Angle::kTheta, Angle::kPhi, Angle::kGamma, Angle::kXi}) {
    AngleRates r = closed_form_rates(p);
    set(r, which, get(r, which) + 0.1);
    const ChannelPair res = eom_residual_general(a, r, o, p);
    CHECK(std::abs(res.spin) + std::abs(res.pairing) > 1e-3);
  }
}

TEST_CASE("block rates agree with central differences") {
  oracle::Draws draws(26);
  const double h = 1e-5;
  for (int k = 0; k < 100; ++k) {
    const BcsAngles a = draws.angles();
    const AngleRates r{draws.uniform(-2, 2), draws.uniform(-2, 2), draws.uniform(-2, 2), draws.uniform(-2, 2)};
    const TransformBlocks d = block_rates(a, r);
    const TransformBlocks plus = build_blocks(advance(a, r, h)), minus = build_blocks(advance(a, r, -h));
    CHECK(oracle::max_abs(d.omega - (plus.omega - minus.omega) / (2 * h)) <= 1e-8);
    CHECK(oracle::max_abs(d.z - (plus.z - minus.z) / (2 * h)) <= 1e-8);
  }
}

TEST_CASE("matrix equations of motion equal the transposed trace matrices on the solution") {
  oracle::Draws draws(27);
  for (int k = 0; k < 300; ++k) {
    const BcsAngles a = draws.angles();
    const Occupations o = draws.occupations();
    const ModelParams p = draws.params();
    const EomMatrices lhs = eom_lhs_matrices(a, closed_form_rates(p), o);
    const EomMatrices rhs = eom_rhs_trace(a, o, p);
    CHECK(oracle::max_abs(lhs.normal - rhs.normal.transpose()) <= 1e-10);
    CHECK(oracle::max_abs(lhs.anomalous - rhs.anomalous.transpose()) <= 1e-10);
  }
}

TEST_CASE("reduced dynamics per parameterization") {
  const ModelParams p{1.0, 0.5, 0.25};
  CHECK(*reduced_rates(ParameterizationKind::kPairing, p).rate_of(Angle::kTheta) == 2.5);
  CHECK(*reduced_rates(ParameterizationKind::kPairing, p).rate_of(Angle::kXi) == 0.0);
  CHECK(*reduced_rates(ParameterizationKind::kSpin, p).rate_of(Angle::kPhi) == 0.5);
  CHECK(*reduced_rates(ParameterizationKind::kSpin, p).rate_of(Angle::kGamma) == 0.0);
  CHECK(reduced_rates(ParameterizationKind::kIdentity, p).rates.empty());
  CHECK_FALSE(reduced_rates(ParameterizationKind::kIdentity, p).evolving);
  const ReducedDynamics ortho = reduced_rates(ParameterizationKind::kOrthogonal, p);
  CHECK_FALSE(ortho.evolving);
  CHECK(ortho.quantized == std::vector<Angle>{Angle::kGamma});
  CHECK(ortho.arbitrary == std::vector<Angle>{Angle::kTheta});
  const ReducedDynamics stat = reduced_rates(ParameterizationKind::kStaticPair, p);
  CHECK_FALSE(stat.evolving);
  CHECK(stat.quantized.size() == 2);
  // Label swap theta -> -phi relative to Pairing.
  const ReducedDynamics swap = reduced_rates(ParameterizationKind::kLabelSwap, p);
  CHECK(swap.evolving);
  CHECK(*swap.rate_of(Angle::kPhi) == -*reduced_rates(ParameterizationKind::kPairing, p).rate_of(Angle::kTheta));
  CHECK(*swap.rate_of(Angle::kXi) == 0.0);
  CHECK_THROWS_AS(reduced_rates(ParameterizationKind::kGeneral, p), ArgumentError);
}

TEST_CASE("reduced dynamics agree with a restricted least-squares solve") {
  oracle::Draws draws(28);
  for (ParameterizationKind kind :
       {ParameterizationKind::kPairing, ParameterizationKind::kSpin, ParameterizationKind::kLabelSwap}) {
    for (int k = 0; k < 50; ++k) {
      FreeAngles free;
      for (Angle a : free_angles(kind)) free[a] = draws.uniform(0.2, 1.3);
      const ModelParams p = draws.params();
      const RestrictedSolution s = solve_restricted_rates(kind, special_parameterization(kind, free), p);
      CHECK(s.residual <= 1e-10);
      for (const auto& [angle, rate] : reduced_rates(kind, p).rates) {
        CHECK(std::abs(get(s.rates, angle) - rate) <= 1e-10);
      }
    }
  }
}

TEST_CASE("static kinds are stationary only on their static sets") {
  const ModelParams p{1.0, 0.5, 0.25};
  const auto res = [&](ParameterizationKind kind, FreeAngles free) {
    return solve_restricted_rates(kind, special_parameterization(kind, free), p).residual;
  };
  CHECK(res(ParameterizationKind::kOrthogonal, {{Angle::kTheta, 0.7}, {Angle::kGamma, oracle::kPi / 2}}) <= 1e-12);
  CHECK(res(ParameterizationKind::kOrthogonal, {{Angle::kTheta, 0.7}, {Angle::kGamma, 0.4}}) > 1e-3);
  CHECK(res(ParameterizationKind::kStaticPair, {{Angle::kGamma, oracle::kPi}, {Angle::kXi, oracle::kPi / 2}}) <= 1e-12);
  CHECK(res(ParameterizationKind::kStaticPair, {{Angle::kGamma, 0.4}, {Angle::kXi, 0.9}}) > 1e-3);
}

TEST_CASE("closed-form integration is linear in time") {
  const Trajectory traj = integrate(BcsAngles{}, Occupations{0.2, 0.7}, {1.0, 0.5, 0.25}, {0.0, 1.0, 2.0},
                                    IntegrationMethod::kClosedForm);
  REQUIRE(traj.samples.size() == 3);
  CHECK(traj.samples[2].angles.theta == 6.0);
  CHECK(traj.samples[2].angles.phi == 1.0);
  CHECK(traj.samples[2].angles.gamma == 0.0);
  CHECK(traj.samples[2].occupations == Occupations{0.2, 0.7});
}

TEST_CASE("rk4 matches the closed form") {
  oracle::Draws draws(29);
  const std::vector<double> grid = uniform_grid(10.0, 1000);
  for (int k = 0; k < 10; ++k) {
    const BcsAngles a = draws.angles();
    const Occupations o = draws.occupations();
    const ModelParams p = draws.params();
    const Trajectory exact = integrate(a, o, p, grid, IntegrationMethod::kClosedForm);
    const Trajectory rk4 = integrate(a, o, p, grid, IntegrationMethod::kRk4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const BcsAngles& x = exact.samples[i].angles;
      const BcsAngles& y = rk4.samples[i].angles;
      REQUIRE(std::abs(x.theta - y.theta) <= 1e-8);
      REQUIRE(std::abs(x.phi - y.phi) <= 1e-8);
      REQUIRE(std::abs(x.gamma - y.gamma) <= 1e-8);
      REQUIRE(std::abs(x.xi - y.xi) <= 1e-8);
    }
  }
}

TEST_CASE("time grids") {
  CHECK(uniform_grid(0.0, 10) == std::vector<double>{0.0});
  CHECK(uniform_grid(1.0, 4) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(uniform_grid(-1.0, 4), ArgumentError);
  CHECK_THROWS_AS(uniform_grid(1.0, 0), ArgumentError);
  const ModelParams p;
  CHECK_THROWS_AS(integrate({}, {}, p, {}, IntegrationMethod::kRk4), ArgumentError);
  CHECK_THROWS_AS(integrate({}, {}, p, {0.5, 1.0}, IntegrationMethod::kRk4), ArgumentError);
  CHECK_THROWS_AS(integrate({}, {}, p, {0.0, 1.0, 1.0}, IntegrationMethod::kRk4), ArgumentError);
  CHECK(integrate({}, {}, p, {0.0}, IntegrationMethod::kRk4).samples.size() == 1);
  CHECK(method_from_name("rk4") == IntegrationMethod::kRk4);
  CHECK_THROWS_AS(method_from_name("euler"), ArgumentError);
}
