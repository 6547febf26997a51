#pragma once

#include <span>
#include <vector>

#include "tripodsim/common.hpp"

namespace tripodsim::tripod {

enum class LoopId { C1, C2 };

struct RabiTriple {
  Complex omega1{};
  Complex omega2{};
  Complex omega3{};
};

// One control loop over t in [-tau, tau]. alpha scales the second Rabi
// amplitude and beta delays the third (C2 only; C1 ignores both).
struct LoopSpec {
  LoopId loop = LoopId::C1;
  double omega0 = 1.0;  // overall Rabi scale, rad per time unit
  double tau = 1.0;     // half duration
  double alpha = 1.0;
  double beta = 0.0;
  int steps = 4096;     // discretization for integrators

  void validate() const;  // throws std::invalid_argument
};

// Spherical control coordinates. theta measures the weight on the third
// drive, phi the balance of the first two, xi the phase of the third.
struct ControlAngles {
  double omega_norm = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double xi = 0.0;
};

struct DarkFrame {
  Vec d1;  // dim 4
  Vec d2;
};

// Drive envelope, cos(pi t / (2 tau)) computed so that f(+-tau) is exactly 0.
double envelope(double t, double tau);

// Rabi triple of the requested loop at time t in [-tau, tau]. The scaled
// second drive of C2 is realized additively: omega2' = omega2 + omega4 with
// omega4 = (alpha-1) * omega0 * f^2, reported through the optional pointer.
RabiTriple loop_rabi(const LoopSpec& spec, double t, Complex* omega4 = nullptr);

// Angles along a loop. xi is the prescribed path value pi*t/tau rather than a
// recomputed arg, which keeps the xi-derivative branch-cut free and makes the
// endpoint closure (theta, phi, xi)(+-tau) = (0, 0, +-pi) exact.
ControlAngles loop_angles(const LoopSpec& spec, double t);

// Generic conversion. Conventions at the degenerate points: theta = pi/2 when
// omega3 = 0; phi = 0 when omega1 = omega2 = 0; xi is the principal arg of
// omega3. All-zero triples have no angles -> std::domain_error.
ControlAngles control_angles(const RabiTriple& r);

// Same, with xi unwrapped continuously along a sampled path.
std::vector<ControlAngles> control_angles(std::span<const RabiTriple> path);

// Inverse map: (omega1, omega2, omega3) with phases (0, 0, xi).
RabiTriple rabi_from_angles(const ControlAngles& a);

// 4x4 Hamiltonian with first row (0, o1, o2, o3), conjugate first column and
// zeros elsewhere; spectrum {+Omega, -Omega, 0, 0}.
Mat tripod_hamiltonian(const RabiTriple& r);

// The two zero-energy eigenstates spanning the dark subspace.
DarkFrame dark_states(const ControlAngles& a);

}  // namespace tripodsim::tripod
