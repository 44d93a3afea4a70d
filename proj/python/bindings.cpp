#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "mfao/bogoliubov.hpp"
#include "mfao/classical.hpp"
#include "mfao/fock.hpp"
#include "mfao/meanfield.hpp"
#include "mfao/symmetry.hpp"
#include "mfao/validation.hpp"
#include "mfao/version.hpp"

namespace py = pybind11;
using namespace mfao;

namespace {

Angle angle_from_name(const std::string& name) {
  for (Angle a : {Angle::kTheta, Angle::kPhi, Angle::kGamma, Angle::kXi}) {
    if (angle_name(a) == name) return a;
  }
  throw py::value_error("unknown angle '" + name + "'");
}

py::dict rates_dict(const ReducedDynamics& d) {
  py::dict rates;
  for (const auto& [angle, rate] : d.rates) rates[py::str(std::string(angle_name(angle)))] = rate;
  py::list quantized, arbitrary;
  for (Angle a : d.quantized) quantized.append(std::string(angle_name(a)));
  for (Angle a : d.arbitrary) arbitrary.append(std::string(angle_name(a)));
  py::dict out;
  out["kind"] = std::string(kind_name(d.kind));
  out["rates"] = rates;
  out["quantized"] = quantized;
  out["arbitrary"] = arbitrary;
  out["evolving"] = d.evolving;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fermionic anharmonic oscillator in a magnetic field: exact and mean-field dynamics";
  m.attr("__version__") = kVersion;

  py::class_<ModelParams>(m, "ModelParams")
      .def(py::init([](double hbar_omega, double u, double gb_b) {
             ModelParams p{hbar_omega, u, gb_b};
             p.validate();
             return p;
           }),
           py::arg("hbar_omega") = 1.0, py::arg("u") = 0.5, py::arg("gb_b") = 0.25)
      .def_readwrite("hbar_omega", &ModelParams::hbar_omega)
      .def_readwrite("u", &ModelParams::u)
      .def_readwrite("gb_b", &ModelParams::gb_b)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(hbar_omega=" + std::to_string(p.hbar_omega) + ", u=" + std::to_string(p.u) +
               ", gb_b=" + std::to_string(p.gb_b) + ")";
      });

  py::class_<BcsAngles>(m, "BcsAngles")
      .def(py::init([](double theta, double phi, double gamma, double xi) {
             BcsAngles a{theta, phi, gamma, xi};
             a.validate();
             return a;
           }),
           py::arg("theta") = 0.0, py::arg("phi") = 0.0, py::arg("gamma") = 0.0, py::arg("xi") = 0.0)
      .def_readwrite("theta", &BcsAngles::theta)
      .def_readwrite("phi", &BcsAngles::phi)
      .def_readwrite("gamma", &BcsAngles::gamma)
      .def_readwrite("xi", &BcsAngles::xi);

  py::class_<Occupations>(m, "Occupations")
      .def(py::init([](double p1, double p2) {
             Occupations o{p1, p2};
             o.validate();
             return o;
           }),
           py::arg("p1") = 0.0, py::arg("p2") = 0.0)
      .def_readwrite("p1", &Occupations::p1)
      .def_readwrite("p2", &Occupations::p2);

  py::class_<AngleRates>(m, "AngleRates")
      .def_readonly("d_theta", &AngleRates::d_theta)
      .def_readonly("d_phi", &AngleRates::d_phi)
      .def_readonly("d_gamma", &AngleRates::d_gamma)
      .def_readonly("d_xi", &AngleRates::d_xi);

  py::enum_<ParameterizationKind>(m, "ParameterizationKind")
      .value("General", ParameterizationKind::kGeneral)
      .value("Pairing", ParameterizationKind::kPairing)
      .value("Spin", ParameterizationKind::kSpin)
      .value("Identity", ParameterizationKind::kIdentity)
      .value("Orthogonal", ParameterizationKind::kOrthogonal)
      .value("StaticPair", ParameterizationKind::kStaticPair)
      .value("LabelSwap", ParameterizationKind::kLabelSwap);

  py::enum_<Observable>(m, "Observable")
      .value("number", Observable::kNumber)
      .value("spin_z", Observable::kSpinZ)
      .value("pair_create", Observable::kPairCreate)
      .value("pair_annihilate", Observable::kPairAnnihilate);

  py::enum_<SymmetryClass>(m, "SymmetryClass")
      .value("Identity", SymmetryClass::kIdentity)
      .value("PairingBreaking", SymmetryClass::kPairingBreaking)
      .value("SpinBreaking", SymmetryClass::kSpinBreaking)
      .value("Relabeling", SymmetryClass::kRelabeling)
      .value("Mixed", SymmetryClass::kMixed);

  // fock-algebra
  m.def("annihilation_op", &annihilation_op, py::arg("mode"));
  m.def("creation_op", &creation_op, py::arg("mode"));
  m.def("hamiltonian", &hamiltonian, py::arg("params"));
  m.def("spectrum", [](const ModelParams& p) {
    py::list out;
    for (const Level& l : spectrum(p)) out.append(py::make_tuple(l.energy, static_cast<int>(l.state)));
    return out;
  }, py::arg("params"), "List of (energy, basis_index) in basis order.");
  m.def("evolve_exact", [](const StateVector& s, const ModelParams& p, double t) {
    const EvolvedState e = evolve_exact(s, p, t);
    return py::make_tuple(e.state, e.renormalized);
  }, py::arg("state"), py::arg("params"), py::arg("t"), "Returns (state, renormalized).");
  m.def("observable", [](const std::string& name) { return observable(observable_from_name(name)); },
        py::arg("kind"));
  m.def("expectation", &expectation, py::arg("op"), py::arg("state"));

  // bogoliubov
  m.def("build_blocks", [](const BcsAngles& a) {
    const TransformBlocks b = build_blocks(a);
    return py::make_tuple(b.omega, b.z);
  }, py::arg("angles"), "Returns (Omega2, Z2).");
  m.def("assemble_transform", [](const Block2& omega, const Block2& z) {
    return assemble_transform({omega, z});
  }, py::arg("omega"), py::arg("z"));
  m.def("unitarity_residual", &unitarity_residual, py::arg("matrix"));
  m.def("quasiparticle_op", &quasiparticle_op, py::arg("angles"), py::arg("mode"), py::arg("daggered"));
  m.def("special_parameterization", [](ParameterizationKind kind, const std::map<std::string, double>& free) {
    FreeAngles f;
    for (const auto& [name, value] : free) f[angle_from_name(name)] = value;
    return special_parameterization(kind, f);
  }, py::arg("kind"), py::arg("free"));

  // meanfield-dynamics
  m.def("meanfield_density", &meanfield_density, py::arg("angles"), py::arg("occupations"));
  m.def("eom_rhs_trace", [](const BcsAngles& a, const Occupations& o, const ModelParams& p) {
    const EomMatrices t = eom_rhs_trace(a, o, p);
    return py::make_tuple(t.normal, t.anomalous);
  }, py::arg("angles"), py::arg("occupations"), py::arg("params"));
  m.def("eom_residual_general", [](const BcsAngles& a, const AngleRates& r, const Occupations& o,
                                   const ModelParams& p) {
    const ChannelPair c = eom_residual_general(a, r, o, p);
    return py::make_tuple(c.spin, c.pairing);
  }, py::arg("angles"), py::arg("rates"), py::arg("occupations"), py::arg("params"));
  m.def("closed_form_rates", &closed_form_rates, py::arg("params"));
  m.def("reduced_rates", [](ParameterizationKind k, const ModelParams& p) { return rates_dict(reduced_rates(k, p)); },
        py::arg("kind"), py::arg("params"));
  m.def("integrate", [](const BcsAngles& a0, const Occupations& occ, const ModelParams& p,
                        const std::vector<double>& times, const std::string& method, double rk4_steps_per_unit) {
    IntegrateOptions opt;
    opt.rk4_steps_per_unit = rk4_steps_per_unit;
    const Trajectory traj = integrate(a0, occ, p, times, method_from_name(method), opt);
    py::array_t<double> angles({static_cast<py::ssize_t>(traj.times.size()), py::ssize_t{4}});
    auto view = angles.mutable_unchecked<2>();
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      const BcsAngles& s = traj.samples[k].angles;
      const auto i = static_cast<py::ssize_t>(k);
      view(i, 0) = s.theta;
      view(i, 1) = s.phi;
      view(i, 2) = s.gamma;
      view(i, 3) = s.xi;
    }
    py::dict out;
    out["times"] = py::array_t<double>(static_cast<py::ssize_t>(traj.times.size()), traj.times.data());
    out["angles"] = angles;
    out["occupations"] = py::make_tuple(occ.p1, occ.p2);
    out["method"] = std::string(method_name(traj.method));
    return out;
  }, py::arg("initial"), py::arg("occupations"), py::arg("params"), py::arg("times"),
     py::arg("method") = "closed_form", py::arg("rk4_steps_per_unit") = 1000.0,
     "Returns a dict with times, angles (N x 4: theta, phi, gamma, xi), occupations, method.");

  // symmetry-analysis
  m.def("decompose", [](const FockOperator& op) {
    const OperatorExpansion e = decompose(op);
    py::dict out;
    for (int k = 0; k < kOperatorTermCount; ++k) {
      out[py::str(std::string(term_name(static_cast<OperatorTerm>(k))))] = e.coefficients[static_cast<std::size_t>(k)];
    }
    return out;
  }, py::arg("op"));

  py::class_<SymmetryReport>(m, "SymmetryReport")
      .def_readonly("number_conserved", &SymmetryReport::number_conserved)
      .def_readonly("spin_conserved", &SymmetryReport::spin_conserved)
      .def_readonly("number_commutator_norm", &SymmetryReport::number_commutator_norm)
      .def_readonly("spin_commutator_norm", &SymmetryReport::spin_commutator_norm)
      .def_readonly("classification", &SymmetryReport::classification);
  m.def("conservation_probe", &conservation_probe, py::arg("angles"));
  m.def("probe_all_kinds", [](const ModelParams& p) {
    py::list out;
    for (const KindSurvey& s : probe_all_kinds(p)) {
      py::dict row;
      row["kind"] = s.kind;
      row["angles"] = s.angles;
      row["report"] = s.report;
      row["dynamics"] = rates_dict(s.dynamics);
      out.append(row);
    }
    return out;
  }, py::arg("params"));

  // classical-equivalence
  py::class_<ClassicalState>(m, "ClassicalState")
      .def(py::init([](double alpha1, double alpha2, double j1, double j2) {
             ClassicalState s{alpha1, alpha2, j1, j2};
             s.validate();
             return s;
           }),
           py::arg("alpha1"), py::arg("alpha2"), py::arg("j1"), py::arg("j2"))
      .def_readonly("alpha1", &ClassicalState::alpha1)
      .def_readonly("alpha2", &ClassicalState::alpha2)
      .def_readonly("j1", &ClassicalState::j1)
      .def_readonly("j2", &ClassicalState::j2);
  m.def("effective_hamiltonian", &effective_hamiltonian, py::arg("params"), py::arg("gamma"), py::arg("xi"));
  m.def("action_angle_hamiltonian", &action_angle_hamiltonian, py::arg("params"), py::arg("state"));
  m.def("to_action_angle", &to_action_angle, py::arg("angles"));
  m.def("hamilton_rates", [](const ModelParams& p) {
    const HamiltonRates r = hamilton_rates(p);
    return py::make_tuple(r.d_alpha1, r.d_alpha2, r.d_j1, r.d_j2);
  }, py::arg("params"));
  m.def("equivalence_check", [](const ModelParams& p) {
    const EquivalenceReport r = equivalence_check(p);
    py::dict out;
    out["passed"] = r.passed;
    out["rate_deviation"] = r.rate_deviation;
    out["action_drift"] = r.action_drift;
    out["slope_deviation"] = r.slope_deviation;
    out["energy_drift"] = r.energy_drift;
    out["bound_violation"] = r.bound_violation;
    return out;
  }, py::arg("params"));

  m.def("run_validation_suite", [](int draws) {
    ValidationOptions opt;
    opt.draws = draws;
    py::list out;
    for (const CheckResult& r : run_validation_suite(opt)) {
      py::dict row;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["max_deviation"] = r.max_deviation;
      row["tolerance"] = r.tolerance;
      out.append(row);
    }
    return out;
  }, py::arg("draws") = 1000);
}
