#include "tripodsim/holonomy.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "tripodsim/numerics.hpp"

namespace tripodsim::holonomy {

using tripod::ControlAngles;
using tripod::LoopId;
using tripod::LoopSpec;

GaugeConnection gauge_connection(const ControlAngles& a) {
  const double c = std::cos(a.theta);
  GaugeConnection g;
  g.a_theta = Mat::Zero(2, 2);
  g.a_phi = Mat::Zero(2, 2);
  g.a_phi(0, 1) = -c;
  g.a_phi(1, 0) = c;
  g.a_xi = Mat::Zero(2, 2);
  g.a_xi(0, 0) = Complex(0.0, 1.0);
  g.a_xi(1, 1) = Complex(0.0, c * c);
  g.evaluated_at = a;
  return g;
}

namespace {

// exp of the anti-Hermitian 2x2 [[i a, w], [-conj(w), i b]] in closed form.
Eigen::Matrix2cd exp_anti_hermitian_2x2(double a, double b, Complex w) {
  const double c0 = 0.5 * (a + b);
  const double cz = 0.5 * (a - b);
  const double cx = w.imag();
  const double cy = w.real();
  const double r = std::sqrt(cx * cx + cy * cy + cz * cz);
  const double sinc = r < 1e-8 ? 1.0 - r * r / 6.0 : std::sin(r) / r;
  const Complex phase(std::cos(c0), std::sin(c0));
  const Complex i_sinc(0.0, sinc);
  Eigen::Matrix2cd u;
  u(0, 0) = std::cos(r) + i_sinc * cz;
  u(0, 1) = i_sinc * Complex(cx, -cy);
  u(1, 0) = i_sinc * Complex(cx, cy);
  u(1, 1) = std::cos(r) - i_sinc * cz;
  return phase * u;
}

double step_time(const LoopSpec& spec, int k) {
  // linear grid with exact endpoints
  const double s = 2.0 * (static_cast<double>(k) / spec.steps) - 1.0;
  return s * spec.tau;
}

}  // namespace

Mat wilson_line(const LoopSpec& spec) {
  spec.validate();
  const int n = spec.steps;
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  ControlAngles prev = tripod::loop_angles(spec, step_time(spec, 0));
  for (int k = 0; k < n; ++k) {
    const double t0 = step_time(spec, k);
    const double t1 = step_time(spec, k + 1);
    const ControlAngles next = tripod::loop_angles(spec, t1);
    const ControlAngles mid = tripod::loop_angles(spec, 0.5 * (t0 + t1));
    const double dphi = next.phi - prev.phi;
    const double dxi = next.xi - prev.xi;
    const double c = std::cos(mid.theta);
    // step generator -(A_phi dphi + A_xi dxi); A_theta contributes nothing
    u = exp_anti_hermitian_2x2(-dxi, -c * c * dxi, c * dphi) * u;
    prev = next;
  }
  return Mat(u);
}

HolonomyResult compose_orders(const Mat& u1, const Mat& u2) {
  if (u1.rows() != 2 || u1.cols() != 2 || u2.rows() != 2 || u2.cols() != 2) {
    throw std::invalid_argument("compose_orders: expected 2x2 holonomies");
  }
  constexpr double kMaxDefect = 1e-6;
  const double d1 = numerics::unitarity_defect(u1);
  const double d2 = numerics::unitarity_defect(u2);
  if (d1 > kMaxDefect || d2 > kMaxDefect) {
    throw PhysicsError("compose_orders: degraded unitary input (defects " +
                       std::to_string(d1) + ", " + std::to_string(d2) + ")");
  }
  HolonomyResult r;
  r.u1 = u1;
  r.u2 = u2;
  r.u_12 = u2 * u1;
  r.u_21 = u1 * u2;
  r.p = std::norm(r.u_12(1, 1));
  r.p_prime = std::norm(r.u_21(1, 1));
  r.p_d = r.p_prime - r.p;
  return r;
}

double population_difference(const HolonomyResult& h) { return h.p_prime - h.p; }

namespace {

void require_grid(const std::vector<double>& grid, const char* name) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string("sweep_pd: empty ") + name + " grid");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string("sweep_pd: ") + name +
                                  " grid must be strictly increasing");
    }
  }
}

}  // namespace

SweepTable sweep_pd(const std::vector<double>& alphas, const std::vector<double>& betas,
                    int steps, unsigned threads) {
  require_grid(alphas, "alpha");
  require_grid(betas, "beta");

  SweepTable table;
  table.alphas = alphas;
  table.betas = betas;
  table.steps = steps;
  const std::size_t total = alphas.size() * betas.size();
  table.p_d.resize(total);
  table.p.resize(total);
  table.p_prime.resize(total);

  const Mat u1 = wilson_line(LoopSpec{LoopId::C1, 1.0, 1.0, 1.0, 0.0, steps});

  auto compute_entry = [&](std::size_t flat) {
    const std::size_t i = flat / betas.size();
    const std::size_t j = flat % betas.size();
    const Mat u2 =
        wilson_line(LoopSpec{LoopId::C2, 1.0, 1.0, alphas[i], betas[j], steps});
    const HolonomyResult r = compose_orders(u1, u2);
    table.p_d[flat] = r.p_d;
    table.p[flat] = r.p;
    table.p_prime[flat] = r.p_prime;
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, total));
  if (workers == 1) {
    for (std::size_t flat = 0; flat < total; ++flat) compute_entry(flat);
    return table;
  }

  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (;;) {
          const std::size_t flat = cursor.fetch_add(1);
          if (flat >= total) return;
          compute_entry(flat);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return table;
}

}  // namespace tripodsim::holonomy
