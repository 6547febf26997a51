#include <doctest.h>

#include <cmath>

#include "tripodsim/device_model.hpp"

using namespace tripodsim;
using namespace tripodsim::device;

namespace {

TransmonParams reference_transmon() {
  TransmonParams p;
  p.e_c = ghz_to_rad(0.3);
  p.e_j_max = ghz_to_rad(15.0);
  p.cap_ratio = 0.1;
  p.v_rms = calibrated_v_rms(p.e_c, p.e_j_max, p.cap_ratio, FluxBias{0.2},
                             ghz_to_rad(0.1));
  return p;
}

}  // namespace

TEST_CASE("qubit frequency at the flux sweet spot") {
  const TransmonParams p = reference_transmon();
  const double eps = qubit_frequency(p, FluxBias{0.0});
  CHECK(rad_to_ghz(eps) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("qubit frequency flux symmetries") {
  const TransmonParams p = reference_transmon();
  const double eps0 = qubit_frequency(p, FluxBias{0.0});
  CHECK(qubit_frequency(p, FluxBias{1.0}) == eps0);
  CHECK(qubit_frequency(p, FluxBias{1.0 / 3.0}) ==
        doctest::Approx(eps0 / std::sqrt(2.0)).epsilon(1e-12));
  for (double phi : {0.05, 0.13, 0.31, 0.42}) {
    CHECK(qubit_frequency(p, FluxBias{phi + 1.0}) == qubit_frequency(p, FluxBias{phi}));
    CHECK(qubit_frequency(p, FluxBias{-phi}) == qubit_frequency(p, FluxBias{phi}));
  }
}

TEST_CASE("half-integer flux is rejected") {
  const TransmonParams p = reference_transmon();
  CHECK_THROWS_AS(qubit_frequency(p, FluxBias{0.5}), PhysicsError);
  CHECK_THROWS_AS(qubit_frequency(p, FluxBias{-0.5}), PhysicsError);
  CHECK_THROWS_AS(qubit_frequency(p, FluxBias{1.5}), PhysicsError);
}

TEST_CASE("coupling vanishes exactly at half-integer flux") {
  const TransmonParams p = reference_transmon();
  CHECK(coupling_strength(p, FluxBias{0.5}) == 0.0);
}

TEST_CASE("coupling follows the square root of the qubit frequency") {
  const TransmonParams p = reference_transmon();
  const FluxBias b1{0.1};
  const FluxBias b2{0.37};
  const double lhs = coupling_strength(p, b1) / coupling_strength(p, b2);
  const double rhs = std::sqrt(qubit_frequency(p, b1) / qubit_frequency(p, b2));
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

  // the ratio g / sqrt(eps) is flux independent
  const double ref =
      coupling_strength(p, FluxBias{0.0}) / std::sqrt(qubit_frequency(p, FluxBias{0.0}));
  for (double phi : {0.05, 0.15, 0.25, 0.35, 0.45, 0.6, 0.8}) {
    const double r =
        coupling_strength(p, FluxBias{phi}) / std::sqrt(qubit_frequency(p, FluxBias{phi}));
    CHECK(std::abs(r / ref - 1.0) <= 1e-12);
  }
}

TEST_CASE("coupling calibration hits the target at the calibration bias") {
  const TransmonParams p = reference_transmon();
  CHECK(rad_to_ghz(coupling_strength(p, FluxBias{0.2})) ==
        doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("drive amplitudes vanish with the flux amplitude") {
  const TransmonParams p = reference_transmon();
  const CavityParams cav{ghz_to_rad(4.9)};
  const DriveAmplitudes amp = drive_amplitudes(p, cav, FluxBias{0.2}, 0.0);
  CHECK(amp.l == 0.0);
  CHECK(amp.t == 0.0);
}

TEST_CASE("drive amplitudes match a central finite difference") {
  const TransmonParams p = reference_transmon();
  const CavityParams cav{ghz_to_rad(4.9)};
  const double h = 1e-6;
  for (double phi0 : {0.1, 0.2, 0.33, -0.27}) {
    const double f_amp = 0.01;
    const DriveAmplitudes amp = drive_amplitudes(p, cav, FluxBias{phi0}, f_amp);
    const double deps = (qubit_frequency(p, FluxBias{phi0 + h}) -
                         qubit_frequency(p, FluxBias{phi0 - h})) /
                        (2.0 * h);
    const double dg = (coupling_strength(p, FluxBias{phi0 + h}) -
                       coupling_strength(p, FluxBias{phi0 - h})) /
                      (2.0 * h);
    CHECK(amp.l == doctest::Approx(deps * f_amp).epsilon(1e-6));
    CHECK(amp.t == doctest::Approx(dg * f_amp).epsilon(1e-6));
  }
}

TEST_CASE("drive amplitude sign and linearity") {
  const TransmonParams p = reference_transmon();
  const CavityParams cav{ghz_to_rad(4.9)};
  const DriveAmplitudes amp = drive_amplitudes(p, cav, FluxBias{0.2}, 0.01);
  CHECK(amp.l < 0.0);  // frequency falls with flux on (0, 1/2)
  const DriveAmplitudes twice = drive_amplitudes(p, cav, FluxBias{0.2}, 0.02);
  CHECK(twice.l == 2.0 * amp.l);
  CHECK(twice.t == 2.0 * amp.t);
  CHECK_THROWS_AS(drive_amplitudes(p, cav, FluxBias{0.5}, 0.01), PhysicsError);
}

TEST_CASE("effective Rabi scale") {
  QubitWorkingPoint w;
  w.eps0 = ghz_to_rad(6.0);
  w.g0 = ghz_to_rad(0.1);
  w.delta0 = ghz_to_rad(0.5);
  const double eta = effective_rabi_scale(w);
  CHECK(eta == doctest::Approx(-23.0 / 240.0).epsilon(1e-12));
  CHECK(w.eta == eta);

  // large detuning limit keeps only the first term
  QubitWorkingPoint far = w;
  far.delta0 = ghz_to_rad(1e9);
  CHECK(effective_rabi_scale(far) ==
        doctest::Approx(w.g0 / (4.0 * w.eps0)).epsilon(1e-8));

  // linear in the coupling
  QubitWorkingPoint doubled = w;
  doubled.g0 = 2.0 * w.g0;
  CHECK(effective_rabi_scale(doubled) == 2.0 * eta);

  QubitWorkingPoint resonant = w;
  resonant.delta0 = 0.0;
  CHECK_THROWS_AS(effective_rabi_scale(resonant), PhysicsError);
  QubitWorkingPoint bad = w;
  bad.eps0 = 0.0;
  CHECK_THROWS_AS(effective_rabi_scale(bad), std::invalid_argument);
}

TEST_CASE("dispersive shift") {
  const double g = ghz_to_rad(0.1);
  CHECK(rad_to_ghz(dispersive_shift(g, 5.0 * g)) == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(dispersive_shift(0.0, ghz_to_rad(0.5)) == 0.0);
  CHECK(dispersive_shift(2.0 * g, 5.0 * g) == 4.0 * dispersive_shift(g, 5.0 * g));
  CHECK_THROWS_AS(dispersive_shift(g, 0.0), PhysicsError);
}

TEST_CASE("subspace Hamiltonian layout") {
  CHECK(build_subspace_hamiltonian({0, 0, 0}, {0, 0, 0}).cwiseAbs().maxCoeff() == 0.0);

  const Mat h = build_subspace_hamiltonian({1.0, 0.0, 0.0}, {0.0, 0.0, 0.0});
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  // 2x2 block oracle: eigenvalues of [[0,1],[1,0]] are +-1, rest stays at 0
  CHECK(es.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(std::abs(es.eigenvalues()[1]) <= 1e-12);
  CHECK(std::abs(es.eigenvalues()[2]) <= 1e-12);
  CHECK(es.eigenvalues()[3] == doctest::Approx(1.0).epsilon(1e-12));

  const Mat h2 = build_subspace_hamiltonian({0.3, -0.2, 0.7}, {1.0, 2.0, 3.0});
  CHECK((h2 - h2.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(h2(0, 0) == Complex(0.0, 0.0));
  for (int i = 1; i < 4; ++i) {
    for (int j = 1; j < 4; ++j) {
      if (i != j) CHECK(h2(i, j) == Complex(0.0, 0.0));
    }
  }
}

TEST_CASE("transmon validation") {
  TransmonParams p = reference_transmon();
  CHECK(p.validate().empty());
  p.e_j_max = ghz_to_rad(3.0);  // E_J/E_C = 10: shallow
  CHECK(p.validate().size() == 1);
  p.e_c = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  DriveSpec d{0.2, 0.0, 0.0};
  CHECK(d.validate().size() == 1);  // outside the linearization regime
  d.amplitude = 0.01;
  CHECK(d.validate().empty());
}

TEST_CASE("working point assembly") {
  const TransmonParams p = reference_transmon();
  const CavityParams cav{ghz_to_rad(4.9)};
  const QubitWorkingPoint w = make_working_point(p, cav, FluxBias{0.2});
  CHECK(w.eps0 == qubit_frequency(p, FluxBias{0.2}));
  CHECK(w.delta0 == doctest::Approx(w.eps0 - cav.omega));
  CHECK(w.eta != 0.0);
}
