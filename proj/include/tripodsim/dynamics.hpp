#pragma once

#include <array>

#include "tripodsim/common.hpp"
#include "tripodsim/device_model.hpp"
#include "tripodsim/tripod.hpp"

namespace tripodsim::dynamics {

// Time is normalized internally: tau = 1 and omega0 = omega0_tau. Legitimate
// because the holonomy (and hence P_d) is invariant under joint rescaling of
// tau and omega0.

// 200 steps per unit of omega0*tau keeps the norm drift below 1e-10.
int default_steps(double omega0_tau);

// One Schroedinger traversal of a loop, reported in the end-of-path dark frame.
struct AdiabaticRun {
  tripod::LoopSpec spec;  // normalized spec actually integrated
  double omega0_tau = 0.0;
  int steps = 0;
  Vec final_state;
  std::array<Complex, 2> dark_overlap{};  // projections onto D1, D2 at +tau
  double leakage = 0.0;                   // population outside the dark subspace
  bool adiabaticity_warning = false;      // leakage > 0.5
};

AdiabaticRun propagate_loop(const tripod::LoopSpec& spec, double omega0_tau, int steps,
                            const Vec& psi0);

struct TwoLoopResult {
  double p = 0.0;        // first C1 then C2, population of state |1>
  double p_prime = 0.0;  // first C2 then C1
  double p_d = 0.0;
  double leakage = 0.0;  // worse of the two runs at the final time
};

// Direct two-loop Schroedinger evolution: the first loop runs over [-tau, tau],
// the second over [tau, 3 tau] with its own clock mapped back to [-tau, tau]
// (the drive phase xi restarts at -pi; P_d is insensitive to the inter-loop
// global phase at the dark-frame level).
TwoLoopResult dynamics_pd_run(double alpha, double beta, double omega0_tau,
                              int steps_per_loop);
double dynamics_pd(double alpha, double beta, double omega0_tau, int steps_per_loop);

// Full-model versus effective-model comparison. The 4x4 subspace Hamiltonian
// with flux-modulated detunings and couplings is integrated in the interaction
// picture of its static part (so zero drive gives exactly the identity), and
// the propagator is compared at the final time against the constant effective
// tripod model with Omega_i = eta_i * L_i * exp(i phase_i).
struct RwaComparison {
  std::array<device::QubitWorkingPoint, 3> working_points{};
  std::array<device::DriveSpec, 3> drive{};  // omega_d must equal delta0 per qubit
  std::array<double, 3> l_amp{};             // detuning modulation amplitudes, rad/ns
  std::array<double, 3> t_amp{};             // coupling modulation amplitudes, rad/ns
  double duration = 0.0;                     // ns
  int steps = 0;                             // 0 = auto (5 ps resolution)
  double deviation = 0.0;                    // max-entry propagator distance
};

// Build a comparison directly from working points and detuning-modulation
// amplitudes; the coupling amplitudes follow from g ~ sqrt(eps):
// T = L * g0 / (2 eps0).
RwaComparison make_rwa_comparison(const std::array<device::QubitWorkingPoint, 3>& wp,
                                  const std::array<double, 3>& l_amp,
                                  const std::array<double, 3>& phases, double duration);

// Device-level builder: working points and modulation amplitudes from the
// transmon parameters, static biases and flux drives.
RwaComparison make_rwa_comparison(const std::array<device::TransmonParams, 3>& params,
                                  const device::CavityParams& cavity,
                                  const std::array<device::FluxBias, 3>& biases,
                                  const std::array<device::DriveSpec, 3>& drives,
                                  double duration);

RwaComparison rwa_compare(const RwaComparison& input);

}  // namespace tripodsim::dynamics
