#include "mfao/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfao/errors.hpp"

namespace mfao {

namespace {

// Value together with its time derivative, for chain-rule expansion of the
// channel equations.
struct Jet {
  Complex v;
  Complex d;
};

Jet operator*(const Jet& a, const Jet& b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Jet operator-(const Jet& a) { return {-a.v, -a.d}; }

Jet jcos(double x, double dx) { return {std::cos(x), -std::sin(x) * dx}; }
Jet jsin(double x, double dx) { return {std::sin(x), std::cos(x) * dx}; }
// e^{i x}
Jet jphase(double x, double dx) {
  const Complex e = std::polar(1.0, x);
  return {e, Complex(0.0, dx) * e};
}

struct AngleJets {
  Jet cg, sg, cx, sx;
  double theta, phi, d_theta, d_phi;

  AngleJets(const BcsAngles& a, const AngleRates& r)
      : cg(jcos(a.gamma, r.d_gamma)),
        sg(jsin(a.gamma, r.d_gamma)),
        cx(jcos(a.xi, r.d_xi)),
        sx(jsin(a.xi, r.d_xi)),
        theta(a.theta),
        phi(a.phi),
        d_theta(r.d_theta),
        d_phi(r.d_phi) {}

  // e^{i (m theta + n phi)}
  Jet phase(double m, double n) const { return jphase(m * theta + n * phi, m * d_theta + n * d_phi); }
};

// Derivative-side brackets of the two channel equations, occupation factors
// removed. Each product is (coefficient) * d/dt{factor}.
ChannelPair derivative_brackets(const BcsAngles& a, const AngleRates& r) {
  const AngleJets j(a, r);
  auto val = [](const Jet& x) { return x.v; };
  auto dot = [](const Jet& x) { return x.d; };

  const Jet cgcx = j.cg * j.cx;
  const Jet sgcx = j.sg * j.cx;
  const Jet cgsx = j.cg * j.sx;
  const Jet sgsx = j.sg * j.sx;

  const Complex spin = -val(j.phase(0, -1) * sgcx) * dot(cgcx) +
                       val(cgcx) * dot(j.phase(0, -1) * sgcx) +
                       val(j.phase(1, -1) * cgsx) * dot(j.phase(-1, 0) * sgsx) -
                       val(j.phase(1, -2) * sgsx) * dot(j.phase(-1, 1) * cgsx);

  const Complex pairing = -val(j.phase(0, 1) * sgcx) * dot(j.phase(-1, 0) * sgsx) -
                          val(cgcx) * dot(j.phase(-1, 1) * cgsx) +
                          val(j.phase(-1, 1) * cgsx) * dot(cgcx) +
                          val(j.phase(-1, 2) * sgsx) * dot(j.phase(0, -1) * sgcx);
  return {spin, pairing};
}

// Driving terms with occupation factors removed.
ChannelPair driving_brackets(const BcsAngles& a, const ModelParams& p) {
  const Complex spin = Complex(0.0, -p.gb_b) * std::polar(1.0, -a.phi) * std::sin(2.0 * a.gamma);
  const Complex pairing = Complex(0.0, 0.5 * (2.0 * p.hbar_omega + p.u)) *
                          std::polar(1.0, -(a.theta - a.phi)) * std::sin(2.0 * a.xi);
  return {spin, pairing};
}

using AngleVec = Eigen::Vector4d;  // theta, phi, gamma, xi

AngleVec to_vec(const BcsAngles& a) { return {a.theta, a.phi, a.gamma, a.xi}; }
BcsAngles from_vec(const AngleVec& v) { return {v(0), v(1), v(2), v(3)}; }

// Classic fixed-step RK4 on dy/dt = f(t, y).
template <class RateField>
AngleVec rk4_step(const RateField& f, double t, const AngleVec& y, double h) {
  const AngleVec k1 = f(t, y);
  const AngleVec k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
  const AngleVec k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
  const AngleVec k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

void Occupations::validate() const {
  auto ok = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!ok(p1) || !ok(p2)) {
    throw ArgumentError("occupations must lie in [0, 1]");
  }
}

bool operator==(const Occupations& a, const Occupations& b) {
  return a.p1 == b.p1 && a.p2 == b.p2;
}

double get(const AngleRates& r, Angle which) {
  switch (which) {
    case Angle::kTheta: return r.d_theta;
    case Angle::kPhi: return r.d_phi;
    case Angle::kGamma: return r.d_gamma;
    case Angle::kXi: return r.d_xi;
  }
  return 0.0;
}

void set(AngleRates& r, Angle which, double value) {
  switch (which) {
    case Angle::kTheta: r.d_theta = value; break;
    case Angle::kPhi: r.d_phi = value; break;
    case Angle::kGamma: r.d_gamma = value; break;
    case Angle::kXi: r.d_xi = value; break;
  }
}

FockOperator meanfield_density(const BcsAngles& a, const Occupations& occ) {
  occ.validate();
  const double p[2] = {occ.p1, occ.p2};
  FockOperator f = FockOperator::Identity();
  for (int mode = 1; mode <= 2; ++mode) {
    const FockOperator cre = quasiparticle_op(a, mode, true);
    const FockOperator ann = quasiparticle_op(a, mode, false);
    const double pi = p[mode - 1];
    f = f * (pi * (cre * ann) + (1.0 - pi) * (ann * cre));
  }
  return f;
}

EomMatrices eom_rhs_trace(const BcsAngles& a, const Occupations& occ, const ModelParams& p) {
  const FockOperator h = hamiltonian(p);
  const FockOperator f0 = meanfield_density(a, occ);
  const FockOperator cre[2] = {quasiparticle_op(a, 1, true), quasiparticle_op(a, 2, true)};
  const FockOperator ann[2] = {quasiparticle_op(a, 1, false), quasiparticle_op(a, 2, false)};
  const Complex minus_i(0.0, -1.0);

  EomMatrices out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.normal(i, j) = minus_i * (commutator(cre[i] * ann[j], h) * f0).trace();
      out.anomalous(i, j) = minus_i * (commutator(ann[i] * ann[j], h) * f0).trace();
    }
  }
  return out;
}

TransformBlocks block_rates(const BcsAngles& a, const AngleRates& r) {
  const AngleJets j(a, r);
  const Jet cgcx = j.cg * j.cx;
  const Jet sgcx = j.sg * j.cx;
  const Jet cgsx = j.cg * j.sx;
  const Jet sgsx = j.sg * j.sx;

  TransformBlocks d;
  d.omega << cgcx.d, (-(j.phase(0, -1) * sgcx)).d,
             (j.phase(0, 1) * sgcx).d, cgcx.d;
  d.z << (j.phase(1, 0) * sgsx).d, (j.phase(1, -1) * cgsx).d,
         (-(j.phase(1, -1) * cgsx)).d, (j.phase(1, -2) * sgsx).d;
  return d;
}

EomMatrices eom_lhs_matrices(const BcsAngles& a, const AngleRates& r, const Occupations& occ) {
  occ.validate();
  const TransformBlocks b = build_blocks(a);
  const TransformBlocks db = block_rates(a, r);
  // The particle-hole block enters the quasiparticle operators as -Z2.
  const Block2 omega = b.omega, z = -b.z;
  const Block2 d_omega = db.omega, d_z = -db.z;

  Block2 occupation = Block2::Zero();
  occupation(0, 0) = occ.p1;
  occupation(1, 1) = occ.p2;

  const Block2 normal_gen = d_omega.adjoint() * omega + d_z.adjoint() * z;
  const Block2 anomalous_gen = d_omega.adjoint() * z.conjugate() + d_z.adjoint() * omega.conjugate();

  EomMatrices out;
  out.normal = occupation * normal_gen - normal_gen * occupation;
  out.anomalous = occupation * anomalous_gen + anomalous_gen * occupation - anomalous_gen;
  return out;
}

ChannelPair eom_driving_terms(const BcsAngles& a, const Occupations& occ, const ModelParams& p) {
  occ.validate();
  const ChannelPair d = driving_brackets(a, p);
  return {(occ.p2 - occ.p1) * d.spin, (1.0 - occ.p1 - occ.p2) * d.pairing};
}

ChannelPair trace_channels(const EomMatrices& trace) {
  return {-trace.normal(1, 0), trace.anomalous(1, 0)};
}

ChannelPair eom_residual_general(const BcsAngles& a, const AngleRates& r, const Occupations& occ,
                                 const ModelParams& p) {
  const ChannelPair drive = eom_driving_terms(a, occ, p);
  const ChannelPair deriv = derivative_brackets(a, r);
  return {drive.spin - (occ.p2 - occ.p1) * deriv.spin,
          drive.pairing - (1.0 - occ.p1 - occ.p2) * deriv.pairing};
}

AngleRates closed_form_rates(const ModelParams& p) {
  AngleRates r;
  r.d_gamma = 0.0;
  r.d_xi = 0.0;
  r.d_phi = 2.0 * p.gb_b;
  r.d_theta = 2.0 * p.gb_b + 2.0 * p.hbar_omega + p.u;
  return r;
}

std::optional<double> ReducedDynamics::rate_of(Angle a) const {
  for (const auto& [angle, rate] : rates) {
    if (angle == a) return rate;
  }
  return std::nullopt;
}

ReducedDynamics reduced_rates(ParameterizationKind kind, const ModelParams& p) {
  ReducedDynamics out;
  out.kind = kind;
  const double pair_energy = 2.0 * p.hbar_omega + p.u;
  switch (kind) {
    case ParameterizationKind::kGeneral:
      throw ArgumentError("General parameterization has no reduced rates; use closed_form_rates");
    case ParameterizationKind::kPairing:
      out.rates = {{Angle::kXi, 0.0}, {Angle::kTheta, pair_energy}};
      out.evolving = true;
      break;
    case ParameterizationKind::kSpin:
      out.rates = {{Angle::kGamma, 0.0}, {Angle::kPhi, 2.0 * p.gb_b}};
      out.evolving = true;
      break;
    case ParameterizationKind::kIdentity:
      break;
    case ParameterizationKind::kOrthogonal:
      out.rates = {{Angle::kGamma, 0.0}};
      out.quantized = {Angle::kGamma};
      out.arbitrary = {Angle::kTheta};
      break;
    case ParameterizationKind::kStaticPair:
      out.rates = {{Angle::kGamma, 0.0}, {Angle::kXi, 0.0}};
      out.quantized = {Angle::kGamma, Angle::kXi};
      break;
    case ParameterizationKind::kLabelSwap:
      out.rates = {{Angle::kXi, 0.0}, {Angle::kPhi, -pair_energy}};
      out.evolving = true;
      break;
  }
  return out;
}

RestrictedSolution solve_restricted_rates(ParameterizationKind kind, const BcsAngles& a,
                                          const ModelParams& p) {
  const std::vector<Angle> free = free_angles(kind);
  const ChannelPair drive = driving_brackets(a, p);
  const Eigen::Vector4d rhs(drive.spin.real(), drive.spin.imag(), drive.pairing.real(),
                            drive.pairing.imag());

  // The derivative brackets are linear in the rates; probe one column per free rate.
  Eigen::MatrixXd coeffs(4, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    AngleRates unit;
    set(unit, free[k], 1.0);
    const ChannelPair col = derivative_brackets(a, unit);
    coeffs.col(static_cast<Eigen::Index>(k)) << col.spin.real(), col.spin.imag(),
        col.pairing.real(), col.pairing.imag();
  }

  RestrictedSolution out;
  if (!free.empty()) {
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(coeffs);
    cod.setThreshold(1e-12);
    const Eigen::VectorXd x = cod.solve(rhs);
    for (std::size_t k = 0; k < free.size(); ++k) set(out.rates, free[k], x(static_cast<Eigen::Index>(k)));
    out.rank = static_cast<int>(cod.rank());
    out.residual = max_abs(rhs - coeffs * x);
  } else {
    out.residual = max_abs(rhs);
  }
  return out;
}

std::string_view method_name(IntegrationMethod m) {
  return m == IntegrationMethod::kRk4 ? "rk4" : "closed_form";
}

IntegrationMethod method_from_name(std::string_view name) {
  if (name == "closed_form") return IntegrationMethod::kClosedForm;
  if (name == "rk4") return IntegrationMethod::kRk4;
  throw ArgumentError("unknown integration method '" + std::string(name) + "'");
}

std::vector<double> uniform_grid(double t_end, int steps) {
  if (!std::isfinite(t_end) || t_end < 0.0) throw ArgumentError("t_end must be finite and >= 0");
  if (steps < 1) throw ArgumentError("steps must be >= 1");
  if (t_end == 0.0) return {0.0};
  std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) grid[static_cast<std::size_t>(k)] = t_end * k / steps;
  return grid;
}

Trajectory integrate(const BcsAngles& a0, const Occupations& occ, const ModelParams& p,
                     const std::vector<double>& times, IntegrationMethod method,
                     const IntegrateOptions& options) {
  a0.validate();
  occ.validate();
  p.validate();
  if (times.empty()) throw ArgumentError("time grid is empty");
  if (times.front() != 0.0) throw ArgumentError("time grid must start at 0");
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1]) || !std::isfinite(times[k])) {
      throw ArgumentError("time grid must be strictly increasing and finite");
    }
  }
  if (!(options.rk4_steps_per_unit > 0.0)) throw ArgumentError("rk4_steps_per_unit must be > 0");

  const AngleRates rates = closed_form_rates(p);
  const AngleVec rate_vec(rates.d_theta, rates.d_phi, rates.d_gamma, rates.d_xi);
  const AngleVec start = to_vec(a0);

  Trajectory traj;
  traj.method = method;
  traj.times = times;
  traj.samples.reserve(times.size());

  if (method == IntegrationMethod::kClosedForm) {
    for (double t : times) traj.samples.push_back({from_vec(start + t * rate_vec), occ});
    return traj;
  }

  auto field = [&rate_vec](double, const AngleVec&) { return rate_vec; };
  AngleVec y = start;
  traj.samples.push_back({a0, occ});
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double span = times[k] - times[k - 1];
    const int substeps = std::max(1, static_cast<int>(std::ceil(span * options.rk4_steps_per_unit - 1e-9)));
    const double h = span / substeps;
    double t = times[k - 1];
    for (int s = 0; s < substeps; ++s, t += h) y = rk4_step(field, t, y, h);
    traj.samples.push_back({from_vec(y), occ});
  }
  return traj;
}

}  // namespace mfao
