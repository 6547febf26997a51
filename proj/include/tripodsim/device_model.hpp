#pragma once

#include <array>
#include <string>
#include <vector>

#include "tripodsim/common.hpp"

namespace tripodsim::device {

// Transmon constants. e_c and e_j_max are energies in angular units
// (E/hbar, rad/ns); v_rms is the lumped coupling prefactor that absorbs the
// electrode constants, fixed by calibration against a known working point.
struct TransmonParams {
  double e_c = 0.0;
  double e_j_max = 0.0;
  double cap_ratio = 0.0;  // C_g / C_Sigma
  double v_rms = 0.0;

  // Throws std::invalid_argument on hard violations; returns soft warnings
  // (shallow transmon regime etc.).
  std::vector<std::string> validate() const;
};

struct CavityParams {
  double omega = 0.0;  // resonator frequency, rad/ns
};

// Reduced external flux Phi / Phi_0.
struct FluxBias {
  double phi_over_phi0 = 0.0;
};

// Sinusoidal flux modulation on one qubit: dPhi(t) = amplitude * cos(w t + phase).
struct DriveSpec {
  double amplitude = 0.0;  // units of Phi_0
  double omega_d = 0.0;    // rad/ns
  double phase = 0.0;

  std::vector<std::string> validate() const;
};

struct QubitWorkingPoint {
  double eps0 = 0.0;    // qubit frequency at the static bias
  double g0 = 0.0;      // coupling at the static bias
  double delta0 = 0.0;  // detuning eps0 - omega_cavity
  double eta = 0.0;     // effective-Rabi scale
};

// cos(pi x) with exact zeros at half-integers and exact +-1 at integers, so
// degenerate flux points are detected exactly.
double cos_pi(double x);
double sin_pi(double x);

// Flux-dependent qubit frequency sqrt(8 E_C E_Jmax |cos(pi Phi/Phi_0)|).
// Half-integer flux collapses the splitting -> PhysicsError.
double qubit_frequency(const TransmonParams& p, FluxBias b);

// Flux-dependent coupling, proportional to |cos(pi Phi/Phi_0)|^(1/4); obeys
// g(Phi) ~ sqrt(eps(Phi)) by construction.
double coupling_strength(const TransmonParams& p, FluxBias b);

struct DriveAmplitudes {
  double l = 0.0;  // detuning modulation amplitude, rad/ns
  double t = 0.0;  // coupling modulation amplitude, rad/ns
};

// First-order response of (Delta, g) to a small flux modulation of amplitude
// flux_amplitude around the static bias. Analytic derivatives of the flux
// dependence; undefined at integer+half flux.
DriveAmplitudes drive_amplitudes(const TransmonParams& p, const CavityParams& c,
                                 FluxBias b0, double flux_amplitude);

// eta = g0/(4 eps0) - g0/(2 delta0); stores the value into the working point.
double effective_rabi_scale(QubitWorkingPoint& w);

// chi = g^2 / Delta.
double dispersive_shift(double g, double delta);

// 4x4 one-excitation-subspace Hamiltonian: first row (0, g1, g2, g3),
// diagonal (0, d1, d2, d3), zero elsewhere. Hermitian by construction.
Mat build_subspace_hamiltonian(const std::array<double, 3>& g,
                               const std::array<double, 3>& delta);

QubitWorkingPoint make_working_point(const TransmonParams& p, const CavityParams& c,
                                     FluxBias b);

// The v_rms that reproduces g_target at the calibration bias.
double calibrated_v_rms(double e_c, double e_j_max, double cap_ratio, FluxBias cal,
                        double g_target);

}  // namespace tripodsim::device
