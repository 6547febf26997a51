#include "tripodsim/numerics.hpp"

#include <cmath>
#include <string>

namespace tripodsim::numerics {

namespace {

void require_square_finite(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  }
  if (m.rows() != 2 && m.rows() != 4) {
    throw std::invalid_argument(std::string(who) + ": expected dimension 2 or 4, got " +
                                std::to_string(m.rows()));
  }
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
  }
}

// exp(-i H dt) for Hermitian H via eigendecomposition.
Mat exp_minus_i_h_dt(const Mat& h, double dt) {
  if (h.isZero(0.0)) {
    return Mat::Identity(h.rows(), h.cols());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const auto& lam = es.eigenvalues();
  const Mat& v = es.eigenvectors();
  Vec phases(lam.size());
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double a = -lam[k] * dt;
    phases[k] = Complex(std::cos(a), std::sin(a));
  }
  return v * phases.asDiagonal() * v.adjoint();
}

Mat taylor_exp_scaled(const Mat& g) {
  // scale down until the 1-norm is comfortable, Taylor-sum, square back up
  const double norm1 = g.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  double scale = 1.0;
  while (norm1 * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  const Mat a = g * scale;
  Mat term = Mat::Identity(g.rows(), g.cols());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace

double unitarity_defect(const Mat& u) {
  if (u.rows() != u.cols()) {
    throw std::invalid_argument("unitarity_defect: matrix must be square");
  }
  const Mat d = u.adjoint() * u - Mat::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Mat& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_anti_hermitian(const Mat& m, double tol) {
  return (m + m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Mat mat_exp(const Mat& g) {
  require_square_finite(g, "mat_exp");
  if (g.isZero(0.0)) {
    return Mat::Identity(g.rows(), g.cols());
  }
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if (is_anti_hermitian(g, 1e-12 * scale)) {
    // G = -iH with H = iG Hermitian
    const Mat h = Complex(0.0, 1.0) * g;
    return exp_minus_i_h_dt(h, 1.0);
  }
  return taylor_exp_scaled(g);
}

namespace {

// shared stepping core for propagate / propagator
template <typename State, typename Apply>
void step_loop(const HamiltonianFn& h_of_t, Eigen::Index dim, double t0, double t1,
               int steps, Apply&& apply) {
  if (steps < 1) {
    throw std::invalid_argument("propagate: steps must be >= 1");
  }
  if (!(t1 >= t0) || !std::isfinite(t0) || !std::isfinite(t1)) {
    throw std::invalid_argument("propagate: bad time interval");
  }
  const double dt = (t1 - t0) / steps;
  for (int k = 0; k < steps; ++k) {
    const double tm = t0 + (k + 0.5) * dt;
    const Mat h = h_of_t(tm);
    if (h.rows() != dim || h.cols() != dim) {
      throw std::invalid_argument("propagate: H(t) dimension mismatch");
    }
    const double hscale = std::max(1.0, h.cwiseAbs().maxCoeff());
    if (!is_hermitian(h, 1e-10 * hscale)) {
      throw PhysicsError("propagate: H(t) is not Hermitian at t = " + std::to_string(tm));
    }
    apply(exp_minus_i_h_dt(h, dt));
  }
}

}  // namespace

Vec propagate(const HamiltonianFn& h_of_t, const Vec& psi0, double t0, double t1,
              int steps) {
  if (psi0.size() != 2 && psi0.size() != 4) {
    throw std::invalid_argument("propagate: state dimension must be 2 or 4");
  }
  Vec psi = psi0;
  step_loop<Vec>(h_of_t, psi0.size(), t0, t1, steps, [&](const Mat& e) { psi = e * psi; });
  return psi;
}

Mat propagator(const HamiltonianFn& h_of_t, int dim, double t0, double t1, int steps) {
  if (dim != 2 && dim != 4) {
    throw std::invalid_argument("propagator: dimension must be 2 or 4");
  }
  Mat u = Mat::Identity(dim, dim);
  step_loop<Mat>(h_of_t, dim, t0, t1, steps, [&](const Mat& e) { u = e * u; });
  return u;
}

}  // namespace tripodsim::numerics
