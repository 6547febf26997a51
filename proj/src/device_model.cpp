#include "tripodsim/device_model.hpp"

#include <cmath>

namespace tripodsim::device {

namespace {

constexpr double kShallowTransmonRatio = 20.0;  // warn below E_J/E_C = 20
constexpr double kLinearRegimeFlux = 0.05;      // warn above |F| = 0.05 Phi_0

// Reduce |x| into [0, 0.5] with the sign of cos tracked, so the endpoints
// come out exact.
double folded_cos_arg(double x, double* sign) {
  x = std::abs(x);
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r = 2.0 - r;
  *sign = 1.0;
  if (r > 0.5) {
    r = 1.0 - r;
    *sign = -1.0;
  }
  return r;
}

}  // namespace

double cos_pi(double x) {
  double sign;
  const double r = folded_cos_arg(x, &sign);
  if (r == 0.5) return 0.0;
  return sign * std::cos(kPi * r);
}

double sin_pi(double x) {
  // sin(pi x) = cos(pi (x - 1/2))
  const double s = x < 0.0 ? -1.0 : 1.0;
  return s * cos_pi(std::abs(x) - 0.5);
}

std::vector<std::string> TransmonParams::validate() const {
  if (!(e_c > 0.0) || !std::isfinite(e_c)) {
    throw std::invalid_argument("TransmonParams: E_C must be positive");
  }
  if (!(e_j_max > 0.0) || !std::isfinite(e_j_max)) {
    throw std::invalid_argument("TransmonParams: E_J_max must be positive");
  }
  if (!(cap_ratio > 0.0 && cap_ratio < 1.0)) {
    throw std::invalid_argument("TransmonParams: cap_ratio must lie in (0,1)");
  }
  if (!std::isfinite(v_rms)) {
    throw std::invalid_argument("TransmonParams: v_rms must be finite");
  }
  std::vector<std::string> warnings;
  if (e_j_max / e_c < kShallowTransmonRatio) {
    warnings.push_back("E_J_max/E_C = " + std::to_string(e_j_max / e_c) +
                       " is below the transmon regime (want >> 1, typically >= 20)");
  }
  return warnings;
}

std::vector<std::string> DriveSpec::validate() const {
  if (!std::isfinite(amplitude) || !std::isfinite(omega_d) || !std::isfinite(phase)) {
    throw std::invalid_argument("DriveSpec: non-finite entries");
  }
  std::vector<std::string> warnings;
  if (std::abs(amplitude) > kLinearRegimeFlux) {
    warnings.push_back("flux amplitude " + std::to_string(amplitude) +
                       " Phi_0 exceeds the linearization regime (|F| <= 0.05)");
  }
  return warnings;
}

double qubit_frequency(const TransmonParams& p, FluxBias b) {
  p.validate();
  const double c = std::abs(cos_pi(b.phi_over_phi0));
  if (c == 0.0) {
    throw PhysicsError("qubit_frequency: degenerate flux point Phi/Phi_0 = " +
                       std::to_string(b.phi_over_phi0) +
                       " (half-integer flux collapses the qubit splitting)");
  }
  return std::sqrt(8.0 * p.e_c * p.e_j_max * c);
}

double coupling_strength(const TransmonParams& p, FluxBias b) {
  p.validate();
  const double c = std::abs(cos_pi(b.phi_over_phi0));
  return p.cap_ratio * p.v_rms * std::pow(p.e_j_max / (8.0 * p.e_c), 0.25) *
         std::pow(c, 0.25);
}

DriveAmplitudes drive_amplitudes(const TransmonParams& p, const CavityParams& c,
                                 FluxBias b0, double flux_amplitude) {
  const double cosv = cos_pi(b0.phi_over_phi0);
  if (cosv == 0.0) {
    throw PhysicsError(
        "drive_amplitudes: flux derivative undefined at half-integer flux");
  }
  // d/dphi ln|cos(pi phi)| = -pi tan(pi phi), so
  //   d eps/dphi = -(pi/2) eps tan(pi phi),  d g/dphi = -(pi/4) g tan(pi phi)
  const double tanv = sin_pi(b0.phi_over_phi0) / cosv;
  const double eps = qubit_frequency(p, b0);
  const double g = coupling_strength(p, b0);
  (void)c;  // Delta = eps - omega, so dDelta/dphi = deps/dphi
  DriveAmplitudes out;
  out.l = -0.5 * kPi * eps * tanv * flux_amplitude;
  out.t = -0.25 * kPi * g * tanv * flux_amplitude;
  return out;
}

double effective_rabi_scale(QubitWorkingPoint& w) {
  if (!(w.eps0 > 0.0)) {
    throw std::invalid_argument("effective_rabi_scale: eps0 must be positive");
  }
  if (w.delta0 == 0.0) {
    throw PhysicsError("effective_rabi_scale: qubit on cavity resonance (Delta = 0)");
  }
  w.eta = w.g0 / (4.0 * w.eps0) - w.g0 / (2.0 * w.delta0);
  return w.eta;
}

double dispersive_shift(double g, double delta) {
  if (delta == 0.0) {
    throw PhysicsError("dispersive_shift: Delta = 0 (resonant, no dispersive regime)");
  }
  return g * g / delta;
}

Mat build_subspace_hamiltonian(const std::array<double, 3>& g,
                               const std::array<double, 3>& delta) {
  for (int i = 0; i < 3; ++i) {
    if (!std::isfinite(g[i]) || !std::isfinite(delta[i])) {
      throw std::invalid_argument("build_subspace_hamiltonian: non-finite input");
    }
  }
  Mat h = Mat::Zero(4, 4);
  for (int i = 0; i < 3; ++i) {
    h(0, i + 1) = g[i];
    h(i + 1, 0) = g[i];
    h(i + 1, i + 1) = delta[i];
  }
  return h;
}

QubitWorkingPoint make_working_point(const TransmonParams& p, const CavityParams& c,
                                     FluxBias b) {
  QubitWorkingPoint w;
  w.eps0 = qubit_frequency(p, b);
  w.g0 = coupling_strength(p, b);
  w.delta0 = w.eps0 - c.omega;
  effective_rabi_scale(w);
  return w;
}

double calibrated_v_rms(double e_c, double e_j_max, double cap_ratio, FluxBias cal,
                        double g_target) {
  const double c = std::abs(cos_pi(cal.phi_over_phi0));
  if (c == 0.0) {
    throw PhysicsError("calibrated_v_rms: cannot calibrate at a degenerate flux point");
  }
  const double shape = cap_ratio * std::pow(e_j_max / (8.0 * e_c), 0.25) * std::pow(c, 0.25);
  return g_target / shape;
}

}  // namespace tripodsim::device
