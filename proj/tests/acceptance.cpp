// Acceptance suite: one numbered check per run-level requirement, one
// [PASS]/[FAIL] line each. Returns the number of failed checks. A subset of
// checks can be selected by listing their numbers on the command line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tripodsim/device_model.hpp"
#include "tripodsim/dynamics.hpp"
#include "tripodsim/holonomy.hpp"
#include "tripodsim/numerics.hpp"
#include "tripodsim/tripod.hpp"

using namespace tripodsim;
using tripod::LoopId;
using tripod::LoopSpec;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d. %s — %s\n", ok ? "PASS" : "FAIL", idx, name.c_str(),
              detail.c_str());
  if (!ok) ++g_failures;
}

LoopSpec c1(int steps) { return LoopSpec{LoopId::C1, 1.0, 1.0, 1.0, 0.0, steps}; }
LoopSpec c2(double alpha, double beta, int steps, double omega0 = 1.0, double tau = 1.0) {
  return LoopSpec{LoopId::C2, omega0, tau, alpha, beta, steps};
}

double wilson_pd(double alpha, double beta, int steps) {
  return holonomy::compose_orders(holonomy::wilson_line(c1(steps)),
                                  holonomy::wilson_line(c2(alpha, beta, steps)))
      .p_d;
}

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

// 1. The composition of the two loops at alpha = 6 peaks near beta = 0.9 with
//    population difference about 0.6.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<double> betas;
  for (int j = 0; j <= 10; ++j) betas.push_back(0.1 * j);
  const holonomy::SweepTable t = holonomy::sweep_pd({6.0}, betas, 4096, 1);
  std::size_t best = 0;
  for (std::size_t j = 1; j < t.p_d.size(); ++j) {
    if (t.p_d[j] > t.p_d[best]) best = j;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = std::abs(betas[best] - 0.9) <= 0.1 + 1e-12 &&
                  std::abs(t.p_d[best] - 0.6) <= 0.1;
  report(1, "noncommutativity peak on the beta sweep at alpha = 6", ok,
         "max P_d = " + fmt(t.p_d[best]) + " at beta = " + fmt(betas[best]) +
             " (want 0.6 +- 0.1 at 0.9 +- 0.1), " + fmt(seconds) + " s");
}

// 2. Identical loops commute: P_d(1, 0) vanishes for the line integral and for
//    the direct evolution.
void criterion_2() {
  const double pd_line = wilson_pd(1.0, 0.0, 4096);
  const double pd_dyn =
      dynamics::dynamics_pd(1.0, 0.0, 200.0, dynamics::default_steps(200.0));
  const bool ok = std::abs(pd_line) <= 1e-10 && std::abs(pd_dyn) <= 1e-6;
  report(2, "commuting-loop null", ok,
         "|P_d| line = " + fmt(std::abs(pd_line)) +
             " (<= 1e-10), dynamics = " + fmt(std::abs(pd_dyn)) + " (<= 1e-6)");
}

// 3. The dark frame really is dark: H annihilates both vectors for random
//    control angles.
void criterion_3() {
  std::mt19937 rng(424243);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    tripod::ControlAngles a;
    a.omega_norm = 1.0;
    a.theta = (kPi / 2) * u(rng);
    a.phi = (kPi / 2) * u(rng);
    a.xi = -kPi + kTwoPi * u(rng);
    const tripod::DarkFrame f = tripod::dark_states(a);
    const Mat h = tripod::tripod_hamiltonian(tripod::rabi_from_angles(a));
    worst = std::max({worst, (h * f.d1).norm(), (h * f.d2).norm()});
  }
  report(3, "dark-state nullity over 1000 random angle triples", worst <= 1e-12,
         "max ||H D_k|| = " + fmt(worst) + " (<= 1e-12 at Omega = 1)");
}

// 4. Analytic connection components equal central finite differences of the
//    dark frame.
void criterion_4() {
  std::mt19937 rng(512);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double h = 1e-5;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    tripod::ControlAngles a;
    a.omega_norm = 1.0;
    a.theta = 0.02 + (kPi / 2 - 0.04) * u(rng);
    a.phi = 0.02 + (kPi / 2 - 0.04) * u(rng);
    a.xi = -3.0 + 6.0 * u(rng);
    const holonomy::GaugeConnection conn = holonomy::gauge_connection(a);

    const auto frame_at = [&](int mu, double offset) {
      tripod::ControlAngles b = a;
      (mu == 0 ? b.theta : mu == 1 ? b.phi : b.xi) += offset;
      return tripod::dark_states(b);
    };
    const tripod::DarkFrame at = tripod::dark_states(a);
    for (int mu = 0; mu < 3; ++mu) {
      const tripod::DarkFrame plus = frame_at(mu, h);
      const tripod::DarkFrame minus = frame_at(mu, -h);
      const Vec dd1 = (plus.d1 - minus.d1) / (2.0 * h);
      const Vec dd2 = (plus.d2 - minus.d2) / (2.0 * h);
      Mat fd(2, 2);
      fd << at.d1.dot(dd1), at.d1.dot(dd2), at.d2.dot(dd1), at.d2.dot(dd2);
      const Mat& ana = mu == 0 ? conn.a_theta : mu == 1 ? conn.a_phi : conn.a_xi;
      worst = std::max(worst, (ana - fd).cwiseAbs().maxCoeff());
    }
  }
  report(4, "gauge connection vs. finite-difference oracle", worst <= 1e-6,
         "max entry mismatch = " + fmt(worst) + " (<= 1e-6, step 1e-5, 100 draws)");
}

// 5. Line-integral quality over the default grid: unitarity at N = 4096 and
//    second-order self-convergence.
void criterion_5() {
  double worst_defect = numerics::unitarity_defect(holonomy::wilson_line(c1(4096)));
  for (int i = 0; i < 29; ++i) {
    for (int j = 0; j < 21; ++j) {
      const double alpha = 1.0 + 7.0 * (static_cast<double>(i) / 28);
      const double beta = static_cast<double>(j) / 20;
      worst_defect =
          std::max(worst_defect, numerics::unitarity_defect(holonomy::wilson_line(
                                     c2(alpha, beta, 4096))));
    }
  }

  double worst_ratio = 1e300;
  for (const auto& [alpha, beta] :
       std::vector<std::pair<double, double>>{{1.0, 0.0}, {6.0, 0.9}, {8.0, 1.0},
                                              {3.5, 0.45}}) {
    const auto at = [&](int n) {
      return alpha == 1.0 && beta == 0.0 ? holonomy::wilson_line(c1(n))
                                         : holonomy::wilson_line(c2(alpha, beta, n));
    };
    const Mat u1024 = at(1024), u2048 = at(2048), u4096 = at(4096), u8192 = at(8192);
    const double d1024 = (u1024 - u2048).cwiseAbs().maxCoeff();
    const double d2048 = (u2048 - u4096).cwiseAbs().maxCoeff();
    const double d4096 = (u4096 - u8192).cwiseAbs().maxCoeff();
    worst_ratio = std::min({worst_ratio, d1024 / d2048, d2048 / d4096});
  }
  const bool ok = worst_defect <= 1e-9 && worst_ratio >= 3.0;
  report(5, "holonomy unitarity and self-convergence", ok,
         "max defect = " + fmt(worst_defect) +
             " (<= 1e-9), min shrink per doubling = " + fmt(worst_ratio) + " (>= 3)");
}

// 6. P_d is pure geometry: joint rescaling of tau and omega0 changes nothing.
void criterion_6() {
  const int n = 4096;
  const double base = wilson_pd(6.0, 0.9, n);
  const auto scaled_pd = [&](double omega0, double tau) {
    return holonomy::compose_orders(
               holonomy::wilson_line(LoopSpec{LoopId::C1, omega0, tau, 1.0, 0.0, n}),
               holonomy::wilson_line(c2(6.0, 0.9, n, omega0, tau)))
        .p_d;
  };
  const double d1 = std::abs(scaled_pd(80.0, 12.5) - base);
  const double d2 = std::abs(scaled_pd(500.0, 0.2) - base);
  const bool ok = d1 <= 1e-10 && d2 <= 1e-10;
  report(6, "P_d invariance under loop rescaling", ok,
         "|dP_d| = " + fmt(std::max(d1, d2)) + " (<= 1e-10)");
}

// 7. Direct evolution converges onto the line-integral value at (6, 0.9):
//    |P_d(dyn) - P_d(line)| monotone nonincreasing over omega0*tau in
//    {25, 50, 100, 200} and <= 0.02 at 200.
void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  const double pd_line = wilson_pd(6.0, 0.9, 4096);
  std::vector<double> errors;
  std::ostringstream curve;
  for (double ot : {25.0, 50.0, 100.0, 200.0}) {
    const double pd =
        dynamics::dynamics_pd(6.0, 0.9, ot, dynamics::default_steps(ot));
    errors.push_back(std::abs(pd - pd_line));
    curve << " " << fmt(errors.back());
  }
  bool monotone = true;
  for (std::size_t k = 1; k < errors.size(); ++k) {
    if (errors[k] > errors[k - 1]) monotone = false;
  }
  const bool tail_ok = errors.back() <= 0.02;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(7, "dynamics-holonomy consistency at (6, 0.9)", monotone && tail_ok,
         "P_d(line) = " + fmt(pd_line) + ", |err| over {25,50,100,200} =" +
             curve.str() + " (want nonincreasing, last <= 0.02), " + fmt(seconds) +
             " s");
}

// 8. Device formulas at the published working point.
void criterion_8() {
  device::TransmonParams p;
  p.e_c = ghz_to_rad(0.3);
  p.e_j_max = ghz_to_rad(15.0);
  p.cap_ratio = 0.1;
  p.v_rms = 1.0;
  const double eps_ghz = rad_to_ghz(device::qubit_frequency(p, device::FluxBias{0.0}));
  const double g = ghz_to_rad(0.1);
  const double chi_ghz = rad_to_ghz(device::dispersive_shift(g, 5.0 * g));
  const bool ok = std::abs(eps_ghz / 6.0 - 1.0) <= 1e-9 &&
                  std::abs(chi_ghz / 0.02 - 1.0) <= 1e-9;
  report(8, "device formulas (qubit frequency, dispersive shift)", ok,
         "eps/2pi = " + fmt(eps_ghz) + " GHz (want 6), chi/2pi = " + fmt(chi_ghz) +
             " GHz (want 0.02), both to 1e-9 relative");
}

// 9. Full-model vs. effective-model comparison: exact zero without drive,
//    smaller deviation at half the drive amplitude (fixed total Rabi angle).
void criterion_9() {
  std::array<device::QubitWorkingPoint, 3> wp;
  for (auto& w : wp) {
    w.eps0 = ghz_to_rad(6.0);
    w.g0 = ghz_to_rad(0.1);
    w.delta0 = ghz_to_rad(0.5);
    device::effective_rabi_scale(w);
  }
  const double l = 0.05 * wp[0].delta0;
  const double omega_total = std::sqrt(3.0) * std::abs(wp[0].eta) * l;
  const double period = kTwoPi / wp[0].delta0;
  const auto strobo = [&](double t) { return std::round(t / period) * period; };

  const double dev0 =
      dynamics::rwa_compare(dynamics::make_rwa_comparison(wp, {0.0, 0.0, 0.0},
                                                          {0.0, 0.0, 0.0},
                                                          strobo(50.0)))
          .deviation;
  const double dev_full =
      dynamics::rwa_compare(dynamics::make_rwa_comparison(
                                wp, {l, l, l}, {0.0, 0.0, 0.0},
                                strobo(kTwoPi / omega_total)))
          .deviation;
  const double dev_half =
      dynamics::rwa_compare(dynamics::make_rwa_comparison(
                                wp, {l / 2, l / 2, l / 2}, {0.0, 0.0, 0.0},
                                strobo(2.0 * kTwoPi / omega_total)))
          .deviation;
  const bool ok = dev0 == 0.0 && dev_half < dev_full;
  report(9, "effective-model error scaling with drive amplitude", ok,
         "deviation: zero drive = " + fmt(dev0) + " (exact 0), full = " +
             fmt(dev_full) + ", half = " + fmt(dev_half) + " (want half < full)");
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    selected.push_back(std::atoi(argv[i]));
  }
  const auto wanted = [&](int k) {
    if (selected.empty()) return true;
    for (int s : selected) {
      if (s == k) return true;
    }
    return false;
  };

  if (wanted(1)) criterion_1();
  if (wanted(2)) criterion_2();
  if (wanted(3)) criterion_3();
  if (wanted(4)) criterion_4();
  if (wanted(5)) criterion_5();
  if (wanted(6)) criterion_6();
  if (wanted(7)) criterion_7();
  if (wanted(8)) criterion_8();
  if (wanted(9)) criterion_9();

  if (g_failures > 0) {
    std::printf("%d acceptance check(s) failed\n", g_failures);
  }
  return g_failures;
}
