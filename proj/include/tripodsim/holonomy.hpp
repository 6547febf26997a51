#pragma once

#include <cstddef>
#include <vector>

#include "tripodsim/common.hpp"
#include "tripodsim/tripod.hpp"

namespace tripodsim::holonomy {

// Anti-Hermitian connection components on the dark subspace, one per control
// coordinate (theta, phi, xi). Functions of theta only; a_theta vanishes
// identically.
struct GaugeConnection {
  Mat a_theta;
  Mat a_phi;
  Mat a_xi;
  tripod::ControlAngles evaluated_at;
};

GaugeConnection gauge_connection(const tripod::ControlAngles& a);

// Path-ordered line integral of the connection along one loop, discretized
// into spec.steps uniform time steps: midpoint theta, exact angle increments,
// later factors multiplied on the left. The result depends only on the path
// in (theta, phi, xi), not on omega0 or tau.
Mat wilson_line(const tripod::LoopSpec& spec);

struct HolonomyResult {
  Mat u1;    // first loop
  Mat u2;    // second loop
  Mat u_12;  // u2 * u1 (first loop applied first)
  Mat u_21;  // u1 * u2
  double p = 0.0;        // |(u_12)_22|^2
  double p_prime = 0.0;  // |(u_21)_22|^2
  double p_d = 0.0;      // p_prime - p
};

// Composes the two holonomies in both orders and reads off the populations of
// the second dark basis vector. Inputs must be unitary to 1e-6.
HolonomyResult compose_orders(const Mat& u1, const Mat& u2);

double population_difference(const HolonomyResult& h);

// P_d over an (alpha, beta) grid, alpha-major storage.
struct SweepTable {
  std::vector<double> alphas;
  std::vector<double> betas;
  int steps = 0;
  std::vector<double> p_d;
  std::vector<double> p;
  std::vector<double> p_prime;

  std::size_t index(std::size_t i, std::size_t j) const { return i * betas.size() + j; }
  double pd_at(std::size_t i, std::size_t j) const { return p_d[index(i, j)]; }
};

// The first-loop holonomy is alpha/beta independent and computed once. Grid
// entries are pure functions of (alpha_i, beta_j), so worker threads produce
// a table bitwise identical to the serial row-major evaluation.
SweepTable sweep_pd(const std::vector<double>& alphas, const std::vector<double>& betas,
                    int steps, unsigned threads = 1);

}  // namespace tripodsim::holonomy
