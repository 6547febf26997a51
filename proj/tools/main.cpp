#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tripodsim/commands.hpp"
#include "tripodsim/config.hpp"

using namespace tripodsim;

int main(int argc, char** argv) {
  CLI::App app{
      "tripodsim: dark-state holonomy simulator for a three-transmon circuit-QED "
      "tripod. Composes two flux-controlled parameter loops in both orders and "
      "reports the resulting population difference."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int steps = 0;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* cmd, bool with_steps_and_threads) {
    cmd->add_option("--config", config_path, "path to the run configuration file")
        ->required();
    cmd->add_option("--out", out_dir, "output directory (overrides [output] directory)");
    if (with_steps_and_threads) {
      cmd->add_option("--steps", steps, "discretization override (N >= 2)");
      cmd->add_option("--threads", threads,
                      "worker threads for grid sweeps (default: all cores)");
    }
  };

  CLI::App* device = app.add_subcommand(
      "device", "report working-point frequencies, couplings and readout shift");
  add_common(device, false);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "population difference over the (alpha, beta) grid, written as CSV");
  add_common(sweep, true);

  CLI::App* dynamics = app.add_subcommand(
      "dynamics", "convergence of direct time evolution toward the holonomy value");
  add_common(dynamics, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitConfig;
  }

  cli::Options opt;
  opt.out_dir = out_dir;
  if (steps > 0) opt.steps = steps;
  opt.threads = threads;

  config::RunConfig cfg;
  try {
    cfg = config::load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return cli::kExitIo;
  }

  if (device->parsed()) return cli::run_device(cfg, std::cout, std::cerr);
  if (sweep->parsed()) return cli::run_sweep(cfg, opt, std::cout, std::cerr);
  return cli::run_dynamics(cfg, opt, std::cout, std::cerr);
}
