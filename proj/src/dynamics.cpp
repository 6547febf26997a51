#include "tripodsim/dynamics.hpp"

#include <cmath>

#include "tripodsim/numerics.hpp"

namespace tripodsim::dynamics {

using tripod::LoopId;
using tripod::LoopSpec;

int default_steps(double omega0_tau) {
  return std::max(100, static_cast<int>(std::ceil(200.0 * omega0_tau)));
}

namespace {

LoopSpec normalized(const LoopSpec& spec, double omega0_tau, int steps) {
  LoopSpec n = spec;
  n.tau = 1.0;
  n.omega0 = omega0_tau;
  n.steps = steps;
  n.validate();
  return n;
}

numerics::HamiltonianFn loop_hamiltonian(const LoopSpec& spec) {
  return [spec](double t) { return tripod::tripod_hamiltonian(tripod::loop_rabi(spec, t)); };
}

}  // namespace

AdiabaticRun propagate_loop(const LoopSpec& spec, double omega0_tau, int steps,
                            const Vec& psi0) {
  if (psi0.size() != 4) {
    throw std::invalid_argument("propagate_loop: state dimension must be 4");
  }
  if (std::abs(psi0.norm() - 1.0) > 1e-6) {
    throw std::invalid_argument("propagate_loop: initial state must be normalized");
  }
  if (!(omega0_tau > 0.0)) {
    throw std::invalid_argument("propagate_loop: omega0_tau must be positive");
  }
  AdiabaticRun run;
  run.spec = normalized(spec, omega0_tau, steps);
  run.omega0_tau = omega0_tau;
  run.steps = steps;
  run.final_state =
      numerics::propagate(loop_hamiltonian(run.spec), psi0, -1.0, 1.0, steps);
  const tripod::DarkFrame frame =
      tripod::dark_states(tripod::loop_angles(run.spec, 1.0));
  run.dark_overlap[0] = frame.d1.dot(run.final_state);
  run.dark_overlap[1] = frame.d2.dot(run.final_state);
  run.leakage =
      1.0 - std::norm(run.dark_overlap[0]) - std::norm(run.dark_overlap[1]);
  run.adiabaticity_warning = run.leakage > 0.5;
  return run;
}

TwoLoopResult dynamics_pd_run(double alpha, double beta, double omega0_tau,
                              int steps_per_loop) {
  const LoopSpec c1 = normalized({LoopId::C1, 1.0, 1.0, 1.0, 0.0, steps_per_loop},
                                 omega0_tau, steps_per_loop);
  const LoopSpec c2 = normalized({LoopId::C2, 1.0, 1.0, alpha, beta, steps_per_loop},
                                 omega0_tau, steps_per_loop);

  Vec psi0 = Vec::Zero(4);
  psi0[1] = 1.0;  // |1> = |0egg>, the initial dark basis state up to phase

  auto two_loop = [&](const LoopSpec& first, const LoopSpec& second) {
    Vec psi = numerics::propagate(loop_hamiltonian(first), psi0, -1.0, 1.0,
                                  steps_per_loop);
    psi = numerics::propagate(loop_hamiltonian(second), psi, -1.0, 1.0,
                              steps_per_loop);
    const tripod::DarkFrame frame =
        tripod::dark_states(tripod::loop_angles(second, 1.0));
    const double leak = 1.0 - std::norm(frame.d1.dot(psi)) -
                        std::norm(frame.d2.dot(psi));
    return std::pair<double, double>(std::norm(psi[1]), leak);
  };

  const auto [p, leak_a] = two_loop(c1, c2);
  const auto [p_prime, leak_b] = two_loop(c2, c1);

  TwoLoopResult out;
  out.p = p;
  out.p_prime = p_prime;
  out.p_d = p_prime - p;
  out.leakage = std::max(leak_a, leak_b);
  return out;
}

double dynamics_pd(double alpha, double beta, double omega0_tau, int steps_per_loop) {
  return dynamics_pd_run(alpha, beta, omega0_tau, steps_per_loop).p_d;
}

RwaComparison make_rwa_comparison(const std::array<device::QubitWorkingPoint, 3>& wp,
                                  const std::array<double, 3>& l_amp,
                                  const std::array<double, 3>& phases,
                                  double duration) {
  RwaComparison c;
  c.working_points = wp;
  c.l_amp = l_amp;
  for (int i = 0; i < 3; ++i) {
    // g ~ sqrt(eps) ties the two modulation amplitudes together
    c.t_amp[i] = l_amp[i] * wp[i].g0 / (2.0 * wp[i].eps0);
    c.drive[i].amplitude = 0.0;  // flux amplitude unused on this route
    c.drive[i].omega_d = wp[i].delta0;
    c.drive[i].phase = phases[i];
  }
  c.duration = duration;
  return c;
}

RwaComparison make_rwa_comparison(const std::array<device::TransmonParams, 3>& params,
                                  const device::CavityParams& cavity,
                                  const std::array<device::FluxBias, 3>& biases,
                                  const std::array<device::DriveSpec, 3>& drives,
                                  double duration) {
  RwaComparison c;
  for (int i = 0; i < 3; ++i) {
    c.working_points[i] = device::make_working_point(params[i], cavity, biases[i]);
    const device::DriveAmplitudes amp =
        device::drive_amplitudes(params[i], cavity, biases[i], drives[i].amplitude);
    c.l_amp[i] = amp.l;
    c.t_amp[i] = amp.t;
    c.drive[i] = drives[i];
  }
  c.duration = duration;
  return c;
}

RwaComparison rwa_compare(const RwaComparison& input) {
  RwaComparison c = input;
  if (!(c.duration > 0.0)) {
    throw std::invalid_argument("rwa_compare: duration must be positive");
  }
  for (int i = 0; i < 3; ++i) {
    const double want = c.working_points[i].delta0;
    if (std::abs(c.drive[i].omega_d - want) > 1e-9 * std::max(1.0, std::abs(want))) {
      throw ConfigError("rwa_compare: drive frequency of qubit " + std::to_string(i + 1) +
                        " must equal the static detuning");
    }
  }

  // static part and its exact eigenframe
  const Mat h0 = device::build_subspace_hamiltonian(
      {c.working_points[0].g0, c.working_points[1].g0, c.working_points[2].g0},
      {c.working_points[0].delta0, c.working_points[1].delta0,
       c.working_points[2].delta0});
  Eigen::SelfAdjointEigenSolver<Mat> es(h0);
  Eigen::Vector4d lam = es.eigenvalues();
  Mat v = es.eigenvectors();
  // order the dressed states by their dominant bare component and fix phases,
  // so the comparison frame is deterministic
  {
    std::array<int, 4> pick{-1, -1, -1, -1};
    std::array<bool, 4> used{false, false, false, false};
    for (int k = 0; k < 4; ++k) {
      int best = -1;
      double best_w = -1.0;
      for (int j = 0; j < 4; ++j) {
        if (used[j]) continue;
        const double w = std::norm(v(k, j));
        if (w > best_w) {
          best_w = w;
          best = j;
        }
      }
      pick[k] = best;
      used[best] = true;
    }
    Mat v2(4, 4);
    Eigen::Vector4d lam2;
    for (int k = 0; k < 4; ++k) {
      Complex ph = v(k, pick[k]);
      ph /= std::abs(ph);
      v2.col(k) = v.col(pick[k]) / ph;
      lam2[k] = lam[pick[k]];
    }
    v = v2;
    lam = lam2;
  }

  // drive patterns in the eigenframe
  std::array<Mat, 3> pattern;
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::Zero(4, 4);
    m(i + 1, i + 1) = c.l_amp[i];
    m(0, i + 1) = c.t_amp[i];
    m(i + 1, 0) = c.t_amp[i];
    pattern[i] = v.adjoint() * m * v;
  }

  const int steps = c.steps > 0
                        ? c.steps
                        : std::max(1000, static_cast<int>(std::ceil(c.duration / 0.005)));
  c.steps = steps;

  const numerics::HamiltonianFn h_int = [&](double t) {
    Mat d = Mat::Zero(4, 4);
    for (int i = 0; i < 3; ++i) {
      const double osc = std::cos(c.drive[i].omega_d * t + c.drive[i].phase);
      if (osc != 0.0) d += osc * pattern[i];
    }
    // interaction picture: conjugate by the eigenphases
    Mat h(4, 4);
    for (int r = 0; r < 4; ++r) {
      for (int s = 0; s < 4; ++s) {
        const double w = (lam[r] - lam[s]) * t;
        h(r, s) = d(r, s) * Complex(std::cos(w), std::sin(w));
      }
    }
    return h;
  };
  const Mat w_full = numerics::propagator(h_int, 4, 0.0, c.duration, steps);

  // constant effective tripod propagator over the same duration
  tripod::RabiTriple eff;
  const auto omega_of = [&](int i) {
    const double mag = c.working_points[i].eta * c.l_amp[i];
    return mag * Complex(std::cos(c.drive[i].phase), std::sin(c.drive[i].phase));
  };
  eff.omega1 = omega_of(0);
  eff.omega2 = omega_of(1);
  eff.omega3 = omega_of(2);
  const Mat h_eff = tripod::tripod_hamiltonian(eff);
  const Mat u_eff = numerics::mat_exp(Complex(0.0, -c.duration) * h_eff);

  c.deviation = (w_full - u_eff).cwiseAbs().maxCoeff();
  return c;
}

}  // namespace tripodsim::dynamics
