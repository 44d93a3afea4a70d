#include <cmath>

#include "doctest.h"
#include "mfao/classical.hpp"
#include "mfao/errors.hpp"
#include "oracles.hpp"

using namespace mfao;

TEST_CASE("hamiltonian values") {
  const ModelParams p{1.0, 0.5, 0.25};
  CHECK(effective_hamiltonian(p, 1.0, 1.0) == 3.5);
  CHECK(action_angle_hamiltonian(p, {0.0, 0.0, -1.0, 1.0}) == -2.5);
  CHECK_THROWS_AS(action_angle_hamiltonian(p, {0.0, 0.0, 1.2, 0.0}), ArgumentError);
}

TEST_CASE("hamilton rates equal the mean-field rates exactly") {
  oracle::Draws draws(41);
  for (int k = 0; k < 100; ++k) {
    const ModelParams p = draws.params();
    const HamiltonRates h = hamilton_rates(p);
    const AngleRates q = closed_form_rates(p);
    CHECK(h.d_alpha1 == q.d_theta);
    CHECK(h.d_alpha2 == q.d_phi);
    CHECK(h.d_j1 == 0.0);
    CHECK(h.d_j2 == 0.0);
  }
}

TEST_CASE("effective hamiltonian generates the mean-field rates") {
  oracle::Draws draws(42);
  const double h = 1e-4;
  for (int k = 0; k < 50; ++k) {
    const ModelParams p = draws.params();
    const double gamma = draws.uniform(-3, 3), xi = draws.uniform(-3, 3);
    const double d_gamma = (effective_hamiltonian(p, gamma + h, xi) - effective_hamiltonian(p, gamma - h, xi)) / (2 * h);
    const double d_xi = (effective_hamiltonian(p, gamma, xi + h) - effective_hamiltonian(p, gamma, xi - h)) / (2 * h);
    const AngleRates q = closed_form_rates(p);
    CHECK(d_gamma == doctest::Approx(q.d_phi).epsilon(1e-8));
    CHECK(d_xi == doctest::Approx(q.d_theta).epsilon(1e-8));
    const AngleRates e = effective_hamilton_rates(p);
    CHECK(e.d_theta == q.d_theta);
    CHECK(e.d_phi == q.d_phi);
    CHECK(e.d_gamma == 0.0);
    CHECK(e.d_xi == 0.0);
  }
}

TEST_CASE("action-angle map") {
  const ClassicalState s = to_action_angle({0.3, -0.2, oracle::kPi, oracle::kPi / 2});
  CHECK(s.alpha1 == 0.3);
  CHECK(s.alpha2 == -0.2);
  CHECK(s.j1 == -1.0);
  CHECK(std::abs(s.j2) <= 1e-16);
}

TEST_CASE("equivalence holds along closed-form and rk4 trajectories") {
  oracle::Draws draws(43);
  for (int k = 0; k < 100; ++k) {
    EquivalenceOptions opt;
    opt.initial = draws.angles();
    opt.occupations = draws.occupations();
    const ModelParams p = draws.params();
    const EquivalenceReport r = equivalence_check(p, opt);
    CHECK(r.passed);
    CHECK(r.rate_deviation == 0.0);
    CHECK(r.action_drift <= 1e-12);
    CHECK(r.bound_violation <= 0.0);
  }
  EquivalenceOptions rk4;
  rk4.method = IntegrationMethod::kRk4;
  const EquivalenceReport r = equivalence_check({1.0, 0.5, 0.25}, rk4);
  CHECK(r.passed);
  CHECK(r.action_drift <= 1e-12);
}
