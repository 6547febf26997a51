#pragma once

#include <functional>

#include "tripodsim/common.hpp"

namespace tripodsim::numerics {

using HamiltonianFn = std::function<Mat(double)>;

// Max-entry absolute deviation of U^dagger U from the identity.
double unitarity_defect(const Mat& u);

bool is_hermitian(const Mat& m, double tol);
bool is_anti_hermitian(const Mat& m, double tol);

// exp(G) for 2x2 / 4x4 generators. Anti-Hermitian G goes through the
// eigendecomposition of iG (exactly unitary result); anything else falls back
// to scaled-and-squared Taylor summation. Dimensions are tiny, so robustness
// wins over asymptotics.
Mat mat_exp(const Mat& g);

// Midpoint piecewise-exponential stepping: psi <- exp(-i H(t_mid) dt) psi.
// Each frozen step is exact, the scheme is second order in dt and unitary,
// so the norm survives ~1e5 steps to better than 1e-10.
// H(t) must stay Hermitian (tolerance 1e-10 relative), else PhysicsError.
Vec propagate(const HamiltonianFn& h_of_t, const Vec& psi0, double t0, double t1,
              int steps);

// Same stepping accumulated into the full propagator over [t0, t1].
Mat propagator(const HamiltonianFn& h_of_t, int dim, double t0, double t1,
               int steps);

}  // namespace tripodsim::numerics
