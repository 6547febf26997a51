#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "tripodsim/config.hpp"

namespace tripodsim::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPhysics = 3;
inline constexpr int kExitIo = 4;

struct Options {
  std::string out_dir;            // empty = use config value
  std::optional<int> steps;       // overrides loop/sweep/wilson discretization
  unsigned threads = 0;           // 0 = hardware concurrency
};

// Fixed-width significant-digit formatting for human reports ("%#.6g" style).
std::string fmt_report(double x);
// Shortest form with 12 significant digits for CSV cells.
std::string fmt_csv(double x);

int run_device(const config::RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_sweep(const config::RunConfig& cfg, const Options& opt, std::ostream& out,
              std::ostream& err);
int run_dynamics(const config::RunConfig& cfg, const Options& opt, std::ostream& out,
                 std::ostream& err);

}  // namespace tripodsim::cli
