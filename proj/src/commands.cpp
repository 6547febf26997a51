#include "tripodsim/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "tripodsim/device_model.hpp"
#include "tripodsim/dynamics.hpp"
#include "tripodsim/holonomy.hpp"
#include "tripodsim/numerics.hpp"

namespace tripodsim::cli {

namespace fs = std::filesystem;

std::string fmt_report(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.6g", x);
  return buf;
}

std::string fmt_csv(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

namespace {

// Map failures onto the documented exit codes. std::invalid_argument and
// std::domain_error count as domain/physics problems.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const PhysicsError& e) {
    err << "physics error: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kExitPhysics;
  }
}

struct DeviceTables {
  std::array<device::TransmonParams, 3> params;
  std::array<device::FluxBias, 3> biases;
  device::CavityParams cavity;
};

DeviceTables instantiate_device(const config::DeviceConfig& dc, std::ostream& err) {
  DeviceTables t;
  t.cavity.omega = ghz_to_rad(dc.cavity_omega_ghz);
  for (int i = 0; i < 3; ++i) {
    const config::QubitConfig& qc = dc.qubits[i];
    device::TransmonParams p;
    p.e_c = ghz_to_rad(qc.e_c_ghz);
    p.e_j_max = ghz_to_rad(qc.e_j_max_ghz);
    p.cap_ratio = qc.cap_ratio;
    const device::FluxBias bias{qc.phi0};
    p.v_rms = device::calibrated_v_rms(p.e_c, p.e_j_max, p.cap_ratio, bias,
                                       ghz_to_rad(qc.g_cal_ghz));
    for (const std::string& w : p.validate()) {
      err << "warning: qubit " << (i + 1) << ": " << w << "\n";
    }
    device::DriveSpec probe{qc.drive_f, 0.0, 0.0};
    for (const std::string& w : probe.validate()) {
      err << "warning: qubit " << (i + 1) << ": " << w << "\n";
    }
    t.params[i] = p;
    t.biases[i] = bias;
  }
  return t;
}

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  }
  const fs::path file = dir / name;
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + file.string() + " for writing");
  }
  return out;
}

std::string resolved_out_dir(const config::RunConfig& cfg, const Options& opt) {
  return opt.out_dir.empty() ? cfg.output.directory : opt.out_dir;
}

}  // namespace

int run_device(const config::RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.device) {
      throw ConfigError("missing [device] section");
    }
    const DeviceTables t = instantiate_device(*cfg.device, err);
    for (int i = 0; i < 3; ++i) {
      const device::QubitWorkingPoint w =
          device::make_working_point(t.params[i], t.cavity, t.biases[i]);
      const double chi = device::dispersive_shift(w.g0, w.delta0);
      const device::DriveAmplitudes amp = device::drive_amplitudes(
          t.params[i], t.cavity, t.biases[i], cfg.device->qubits[i].drive_f);
      out << "qubit " << (i + 1) << ": eps/2pi = " << fmt_report(rad_to_ghz(w.eps0))
          << " GHz  g/2pi = " << fmt_report(rad_to_ghz(w.g0))
          << " GHz  Delta/2pi = " << fmt_report(rad_to_ghz(w.delta0))
          << " GHz  eta = " << fmt_report(w.eta)
          << "  chi/2pi = " << fmt_report(rad_to_ghz(chi)) << " GHz\n";
      out << "  drive: L/2pi = " << fmt_report(rad_to_ghz(amp.l))
          << " GHz  T/2pi = " << fmt_report(rad_to_ghz(amp.t))
          << " GHz  Omega/2pi = " << fmt_report(rad_to_ghz(w.eta * amp.l)) << " GHz\n";
    }
    return kExitOk;
  });
}

int run_sweep(const config::RunConfig& cfg, const Options& opt, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.sweep) {
      throw ConfigError("missing [sweep] section");
    }
    config::SweepConfig sc = *cfg.sweep;
    if (opt.steps) sc.steps = *opt.steps;

    const std::vector<double> alphas = sc.alpha.points();
    const std::vector<double> betas = sc.beta.points();
    const holonomy::SweepTable table =
        holonomy::sweep_pd(alphas, betas, sc.steps, opt.threads);

    if (cfg.output.csv) {
      std::ofstream csv = open_output(resolved_out_dir(cfg, opt), "sweep.csv");
      csv << "alpha,beta,p_d,p,p_prime,steps\n";
      for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (std::size_t j = 0; j < betas.size(); ++j) {
          const std::size_t flat = table.index(i, j);
          csv << fmt_csv(alphas[i]) << ',' << fmt_csv(betas[j]) << ','
              << fmt_csv(table.p_d[flat]) << ',' << fmt_csv(table.p[flat]) << ','
              << fmt_csv(table.p_prime[flat]) << ',' << sc.steps << "\n";
        }
      }
    }

    std::size_t best = 0;
    for (std::size_t flat = 1; flat < table.p_d.size(); ++flat) {
      if (table.p_d[flat] > table.p_d[best]) best = flat;
    }
    const std::size_t bi = best / betas.size();
    const std::size_t bj = best % betas.size();
    out << "grid maximum: alpha = " << fmt_report(alphas[bi])
        << "  beta = " << fmt_report(betas[bj])
        << "  P_d = " << fmt_report(table.p_d[best]) << "\n";
    return kExitOk;
  });
}

int run_dynamics(const config::RunConfig& cfg, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    if (!cfg.dynamics) {
      throw ConfigError("missing [dynamics] section");
    }
    config::DynamicsConfig dc = *cfg.dynamics;
    if (opt.steps) dc.wilson_steps = *opt.steps;

    const Mat u1 = holonomy::wilson_line(
        {tripod::LoopId::C1, 1.0, 1.0, 1.0, 0.0, dc.wilson_steps});
    const Mat u2 = holonomy::wilson_line(
        {tripod::LoopId::C2, 1.0, 1.0, dc.alpha, dc.beta, dc.wilson_steps});
    const double pd_wilson = holonomy::compose_orders(u1, u2).p_d;

    std::vector<double> abs_errors;
    std::optional<std::ofstream> csv;
    if (cfg.output.csv) {
      csv = open_output(resolved_out_dir(cfg, opt), "dynamics.csv");
      *csv << "omega0_tau,p_d_dynamics,p_d_wilson,abs_error,leakage\n";
    }
    for (double ot : dc.omega0_tau) {
      const int steps = std::max(2, static_cast<int>(std::ceil(dc.steps_factor * ot)));
      const dynamics::TwoLoopResult r =
          dynamics::dynamics_pd_run(dc.alpha, dc.beta, ot, steps);
      const double abs_error = std::abs(r.p_d - pd_wilson);
      abs_errors.push_back(abs_error);
      out << "omega0_tau = " << fmt_report(ot) << "  P_d(dyn) = " << fmt_report(r.p_d)
          << "  P_d(wilson) = " << fmt_report(pd_wilson)
          << "  |err| = " << fmt_report(abs_error)
          << "  leakage = " << fmt_report(r.leakage) << "\n";
      if (csv) {
        *csv << fmt_csv(ot) << ',' << fmt_csv(r.p_d) << ',' << fmt_csv(pd_wilson) << ','
             << fmt_csv(abs_error) << ',' << fmt_csv(r.leakage) << "\n";
      }
    }
    const bool monotone = std::is_sorted(abs_errors.rbegin(), abs_errors.rend());
    out << "convergence: " << (monotone ? "PASS" : "FAIL")
        << " (abs_error monotone nonincreasing over the omega0_tau list)\n";
    return kExitOk;
  });
}

}  // namespace tripodsim::cli
