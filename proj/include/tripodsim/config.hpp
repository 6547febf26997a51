#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tripodsim/common.hpp"

namespace tripodsim::config {

// Uniform grid specification; count == 1 degenerates to {min}.
struct GridSpec {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
  std::vector<double> points() const;
};

struct QubitConfig {
  double e_c_ghz = 0.3;
  double e_j_max_ghz = 15.0;
  double cap_ratio = 0.1;
  double phi0 = 0.2;       // static bias, units of Phi_0
  double g_cal_ghz = 0.1;  // coupling at the static bias, fixes the prefactor
  double drive_f = 0.01;   // flux modulation amplitude, units of Phi_0
};

struct DeviceConfig {
  double cavity_omega_ghz = 4.9;
  std::array<QubitConfig, 3> qubits{};
};

struct LoopConfig {
  double omega0_tau = 200.0;
  double alpha = 6.0;
  double beta = 0.9;
  int steps = 4096;
};

struct SweepConfig {
  GridSpec alpha{1.0, 8.0, 29};
  GridSpec beta{0.0, 1.0, 21};
  int steps = 4096;
};

struct DynamicsConfig {
  std::vector<double> omega0_tau{25.0, 50.0, 100.0, 200.0};
  double alpha = 6.0;
  double beta = 0.9;
  int steps_factor = 200;   // integration steps per unit of omega0*tau
  int wilson_steps = 4096;  // discretization of the reference holonomy
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
};

struct RunConfig {
  std::optional<DeviceConfig> device;
  std::optional<LoopConfig> loop;
  std::optional<SweepConfig> sweep;
  std::optional<DynamicsConfig> dynamics;
  OutputConfig output;
};

// INI-style text: [section] headers, key = value pairs, '#' comments.
// Unknown sections or keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);  // IoError if unreadable

}  // namespace tripodsim::config
