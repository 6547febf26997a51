#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace tripodsim {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;  // dense complex matrix (2x2 and 4x4 throughout)
using Vec = Eigen::VectorXcd;  // complex state vector

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// All internal frequencies are angular (rad/ns, hbar = 1). Interfaces speak
// cyclic GHz; convert at the boundary only.
inline double ghz_to_rad(double f_ghz) { return kTwoPi * f_ghz; }
inline double rad_to_ghz(double omega) { return omega / kTwoPi; }

// Bad or missing configuration input. CLI exit code 2.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Physical-regime violation: degenerate flux point, resonance, broken model
// assumption, degraded unitary input. CLI exit code 3.
class PhysicsError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Filesystem failure. CLI exit code 4.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tripodsim
