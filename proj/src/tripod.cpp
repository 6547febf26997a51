#include "tripodsim/tripod.hpp"

#include <cmath>
#include <string>

namespace tripodsim::tripod {

namespace {

Complex unit_phase(double xi) { return Complex(std::cos(xi), std::sin(xi)); }

void require_in_window(double t, double tau) {
  if (!(t >= -tau && t <= tau)) {
    throw std::domain_error("loop time t = " + std::to_string(t) +
                            " outside [-tau, tau] with tau = " + std::to_string(tau));
  }
}

struct LoopShape {
  double a;  // alpha for C2, 1 for C1
  double b;  // beta for C2, 0 for C1
};

// Single code path for both loops; C1 is C2 at (alpha, beta) = (1, 0), so the
// reduction is exact.
LoopShape shape(const LoopSpec& spec) {
  if (spec.loop == LoopId::C2) return {spec.alpha, spec.beta};
  return {1.0, 0.0};
}

}  // namespace

void LoopSpec::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("LoopSpec: tau must be positive");
  }
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw std::invalid_argument("LoopSpec: omega0 must be positive");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("LoopSpec: alpha must be positive");
  }
  if (!(beta >= 0.0 && beta <= 2.0)) {
    throw std::invalid_argument("LoopSpec: beta must lie in [0, 2]");
  }
  if (steps < 2) {
    throw std::invalid_argument("LoopSpec: steps must be >= 2");
  }
}

double envelope(double t, double tau) {
  // sin(pi/2 (1 - |t|/tau)) equals cos(pi t / (2 tau)) and hits 0 exactly
  return std::sin(0.5 * kPi * (1.0 - std::abs(t) / tau));
}

RabiTriple loop_rabi(const LoopSpec& spec, double t, Complex* omega4) {
  require_in_window(t, spec.tau);
  const auto [a, b] = shape(spec);
  const double f = envelope(t, spec.tau);
  const double xi = kPi * (t / spec.tau);
  const double u = (t - b * spec.tau) / spec.tau;
  RabiTriple r;
  r.omega1 = spec.omega0 * f;
  r.omega2 = a * (spec.omega0 * f * f);
  r.omega3 = spec.omega0 * std::exp(-u * u) * unit_phase(xi);
  if (omega4 != nullptr) {
    *omega4 = (a - 1.0) * (spec.omega0 * f * f);
  }
  return r;
}

ControlAngles loop_angles(const LoopSpec& spec, double t) {
  require_in_window(t, spec.tau);
  const auto [a, b] = shape(spec);
  const double f = envelope(t, spec.tau);
  const double u = (t - b * spec.tau) / spec.tau;
  const double num = std::hypot(f, a * f * f);  // sqrt(|o1|^2 + |o2|^2) / omega0
  const double den = std::exp(-u * u);          // |o3| / omega0
  ControlAngles out;
  out.omega_norm = spec.omega0 * std::hypot(num, den);
  out.theta = std::atan2(num, den);
  out.phi = std::atan2(a * f * f, f);  // f >= 0 on the window
  out.xi = kPi * (t / spec.tau);
  return out;
}

ControlAngles control_angles(const RabiTriple& r) {
  const double m1 = std::abs(r.omega1);
  const double m2 = std::abs(r.omega2);
  const double m3 = std::abs(r.omega3);
  const double m12 = std::hypot(m1, m2);
  const double norm = std::hypot(m12, m3);
  if (norm == 0.0) {
    throw std::domain_error("control_angles: all-zero Rabi triple has no angles");
  }
  ControlAngles out;
  out.omega_norm = norm;
  out.theta = std::atan2(m12, m3);
  out.phi = (m1 == 0.0 && m2 == 0.0) ? 0.0 : std::atan2(m2, m1);
  out.xi = (m3 == 0.0) ? 0.0 : std::arg(r.omega3);
  return out;
}

std::vector<ControlAngles> control_angles(std::span<const RabiTriple> path) {
  std::vector<ControlAngles> out;
  out.reserve(path.size());
  double prev_xi = 0.0;
  for (std::size_t k = 0; k < path.size(); ++k) {
    ControlAngles a = control_angles(path[k]);
    if (k > 0) {
      // move to the branch nearest the previous sample
      double d = a.xi - prev_xi;
      d -= kTwoPi * std::round(d / kTwoPi);
      a.xi = prev_xi + d;
    }
    prev_xi = a.xi;
    out.push_back(a);
  }
  return out;
}

RabiTriple rabi_from_angles(const ControlAngles& a) {
  RabiTriple r;
  r.omega1 = a.omega_norm * std::sin(a.theta) * std::cos(a.phi);
  r.omega2 = a.omega_norm * std::sin(a.theta) * std::sin(a.phi);
  r.omega3 = a.omega_norm * std::cos(a.theta) * unit_phase(a.xi);
  return r;
}

Mat tripod_hamiltonian(const RabiTriple& r) {
  for (const Complex& o : {r.omega1, r.omega2, r.omega3}) {
    if (!std::isfinite(o.real()) || !std::isfinite(o.imag())) {
      throw std::invalid_argument("tripod_hamiltonian: non-finite Rabi triple");
    }
  }
  Mat h = Mat::Zero(4, 4);
  h(0, 1) = r.omega1;
  h(0, 2) = r.omega2;
  h(0, 3) = r.omega3;
  h(1, 0) = std::conj(r.omega1);
  h(2, 0) = std::conj(r.omega2);
  h(3, 0) = std::conj(r.omega3);
  return h;
}

DarkFrame dark_states(const ControlAngles& a) {
  const Complex e = unit_phase(a.xi);
  const double ct = std::cos(a.theta);
  const double st = std::sin(a.theta);
  const double cp = std::cos(a.phi);
  const double sp = std::sin(a.phi);
  DarkFrame frame;
  frame.d1 = Vec::Zero(4);
  frame.d2 = Vec::Zero(4);
  frame.d1[1] = sp * e;
  frame.d1[2] = -cp * e;
  frame.d2[1] = ct * cp * e;
  frame.d2[2] = ct * sp * e;
  frame.d2[3] = Complex(-st, 0.0);
  return frame;
}

}  // namespace tripodsim::tripod
