#include <catch2/catch_amalgamated.hpp>

#include "lightcone/photon.hpp"

using namespace lightcone;

namespace {
cd packet(const MomentumPoint& p) {
  return cd(std::exp(-2.0 * (p.p0 - 1.5) * (p.p0 - 1.5)), 0);
}
}  // namespace

TEST_CASE("photon model data", "[photon]") {
  const PerceptionModel m = build_photon_model();

  Eigen::Vector4cd plus;
  plus << 0, 1, cd(0, 1), 0;
  plus /= std::sqrt(2.0);
  CHECK((m.epsilon.col(0) - plus).cwiseAbs().maxCoeff() < 1e-15);

  CHECK(std::abs(m.epsilon.col(0).norm() - 1.0) < 1e-15);
  CHECK(std::abs(m.epsilon.col(1).norm() - 1.0) < 1e-15);
  CHECK(std::abs(m.epsilon.col(0).dot(m.epsilon.col(1))) < 1e-15);
  const Eigen::Vector4cd p0c = base_momentum().cast<cd>();
  CHECK(std::abs(p0c.dot(m.epsilon.col(0))) < 1e-15);
  CHECK(std::abs(p0c.dot(m.epsilon.col(1))) < 1e-15);
}

TEST_CASE("little-group expansion of the polarizations", "[photon]") {
  // On the plain polarization vectors (0, 1, +-i, 0):
  //   Phi(B) e_+ = z^2 e_+ + (conj b z) p0,  Phi(B) e_- = conj(z)^2 e_- + (b conj z) p0.
  const PerceptionModel m = build_photon_model();
  const Eigen::Vector4cd p0c = base_momentum().cast<cd>();
  const Eigen::Vector4cd eplus = std::sqrt(2.0) * circular_polarization(+1);
  const Eigen::Vector4cd eminus = std::sqrt(2.0) * circular_polarization(-1);
  SL2CSampler rng(41, 0.0);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const LittleGroupElement B = random_little(rng);
    const Eigen::MatrixXcd phiB = m.phi(B.matrix());
    const cd z = B.z, b = B.b;
    const Eigen::Vector4cd plus_expect = z * z * eplus + std::conj(b) * z * p0c;
    const Eigen::Vector4cd minus_expect =
        std::conj(z) * std::conj(z) * eminus + b * std::conj(z) * p0c;
    worst = std::max(worst, ((phiB * eplus).eval() - plus_expect).cwiseAbs().maxCoeff());
    worst = std::max(worst, ((phiB * eminus).eval() - minus_expect).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("transversality and the gauge line", "[photon]") {
  const PerceptionModel m = build_photon_model();
  SL2CSampler rng(42, 1.0);

  for (int t = 0; t < 200; ++t) {
    Eigen::Vector3d d = rng.direction();
    if (d[2] < -0.995) continue;
    const MomentumPoint p = lift((0.5 + 3.0 * rng.uniform()) * d);
    const FiberFrame f = fiber_at(m, p);

    for (int c = 0; c < f.f_basis.cols(); ++c)
      CHECK(transversality_check(p, f.f_basis.col(c)) < 1e-10);

    // the gauge direction is null, hence transverse
    CHECK(transversality_check(p, gauge_line(p)) < 1e-12);

    // D_p = C p as projectors
    Eigen::MatrixXcd line(4, 1);
    line.col(0) = gauge_line(p);
    CHECK((span_projector(line) - span_projector(f.d_basis)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(numerical_rank(f.d_basis) == 1);

    // gauge line sits inside the fiber
    CHECK(fiber_membership_defect(f, gauge_line(p)) < 1e-10);
  }

  // a timelike vector at p0 is not transverse
  Eigen::Vector4cd e0;
  e0 << 1, 0, 0, 0;
  CHECK(transversality_check(lift(Eigen::Vector3d(0, 0, 1)), e0) == 1.0);
}

TEST_CASE("momentum-space field equations are exact on the shell", "[photon]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({10, 0.5, 4.0}, {48});
  const PerceptionWaveFunction psi = make_section(m, g, packet, {cd(1, 0), cd(0.2, -0.5)});
  double worst_transverse = 0.0, worst_onshell = 0.0;
  for (size_t i = 0; i < g.size(); ++i) {
    worst_transverse =
        std::max(worst_transverse, transversality_check(g.node(i), psi.values[i]));
    const FourVector q = g.node(i).four_vector();
    worst_onshell = std::max(worst_onshell, std::abs(minkowski_inner(q, q)) *
                                                psi.values[i].cwiseAbs().maxCoeff());
  }
  CHECK(worst_transverse < 1e-12);
  CHECK(worst_onshell < 1e-12);
}

TEST_CASE("single-node synthesis is one quadrature term", "[photon]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({4, 0.5, 3.0}, {16});
  const size_t pick = 17;

  PerceptionWaveFunction psi;
  psi.grid = g;
  psi.values.assign(g.size(), Eigen::VectorXcd::Zero(4));
  Eigen::Vector4cd zbar;
  zbar << cd(0.3, 0.1), cd(1, 0), cd(0, -1), cd(0.4, 0);
  psi.values[pick] = zbar;

  const SpacetimeField f = synthesize_potential(psi, 5, 0.3);
  const FourVector pbar = g.node(pick).four_vector();
  const double pref = g.weight(pick) * std::sqrt(pbar[0]) / std::pow(2 * M_PI, 1.5);
  double worst = 0.0;
  for (int it = 0; it < 5; ++it)
    for (int ix = 0; ix < 5; ++ix)
      for (int iy = 0; iy < 5; ++iy)
        for (int iz = 0; iz < 5; ++iz) {
          const FourVector x = f.point(it, ix, iy, iz);
          const cd phase = std::exp(
              cd(0, -pbar[0] * x[0] + pbar[1] * x[1] + pbar[2] * x[2] + pbar[3] * x[3]));
          for (int c = 0; c < 4; ++c)
            worst = std::max(worst,
                             std::abs(f.at(c, it, ix, iy, iz) - pref * phase * zbar[c]));
        }
  CHECK(worst < 1e-13);
}

TEST_CASE("synthesis is linear", "[photon]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({5, 0.5, 3.0}, {20});
  const PerceptionWaveFunction a = make_section(m, g, packet, {cd(1, 0), cd(0, 0)});
  const PerceptionWaveFunction b = make_section(
      m, g, [](const MomentumPoint& p) { return cd(0, 0.4) * packet(p); },
      {cd(0, 0), cd(1, 0)});
  PerceptionWaveFunction sum = a;
  for (size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += b.values[i];

  const SpacetimeField fa = synthesize_potential(a, 4, 0.25);
  const SpacetimeField fb = synthesize_potential(b, 4, 0.25);
  const SpacetimeField fsum = synthesize_potential(sum, 4, 0.25);
  double worst = 0.0;
  for (size_t i = 0; i < fsum.data.size(); ++i)
    worst = std::max(worst, std::abs(fsum.data[i] - fa.data[i] - fb.data[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("wave and lorenz residuals converge at second order", "[photon]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({8, 0.5, 4.0}, {32});
  const PerceptionWaveFunction psi = make_section(m, g, packet, {cd(1, 0), cd(0.5, 0.3)});

  std::vector<double> wave, lorenz;
  for (const double h : {0.16, 0.08, 0.04}) {
    const VectorFieldResiduals r = pde_residuals(synthesize_potential(psi, 9, h));
    wave.push_back(r.wave);
    lorenz.push_back(r.lorenz);
  }
  for (size_t k = 0; k + 1 < wave.size(); ++k) {
    CHECK(wave[k] / wave[k + 1] > 3.6);
    CHECK(lorenz[k] / lorenz[k + 1] > 3.6);
  }

  // single plane wave (a one-node section): same second-order shrink
  PerceptionWaveFunction plane;
  plane.grid = g;
  plane.values.assign(g.size(), Eigen::VectorXcd::Zero(4));
  plane.values[g.size() / 2] =
      m.phi(standard_boost(g.node(g.size() / 2))) * m.epsilon * Eigen::Vector2cd(1, 0);
  std::vector<double> pwave;
  for (const double h : {0.16, 0.08}) {
    const VectorFieldResiduals r = pde_residuals(synthesize_potential(plane, 9, h));
    pwave.push_back(r.wave);
  }
  CHECK(pwave[0] / pwave[1] > 3.6);

  CHECK_THROWS_AS(pde_residuals(SpacetimeField::centered(2, 0.1, 4)),
                  std::invalid_argument);
}

TEST_CASE("gauge-shifted sections synthesize to gradient-shifted fields", "[photon]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({8, 0.5, 4.0}, {32});
  const PerceptionWaveFunction psi = make_section(m, g, packet, {cd(1, 0), cd(0, 1)});
  auto zeta = [](const MomentumPoint& p) { return cd(0.4, 0.2) * packet(p); };
  const PerceptionWaveFunction shifted = gauge_shift(psi, zeta);

  const int n = 7;
  const double h = 0.05;
  const SpacetimeField fa = synthesize_potential(psi, n, h);
  const SpacetimeField fb = synthesize_potential(shifted, n, h);
  // g is the scalar synthesized from i * zeta; then A' - A = grad g with
  // upper-index gradient (d_t, -d_x, -d_y, -d_z).
  const SpacetimeField gs = synthesize_scalar(
      g, [&](const MomentumPoint& p) { return cd(0, 1) * zeta(p); }, n, h);

  double worst = 0.0, scale = gs.max_abs();
  for (int it = 1; it + 1 < n; ++it)
    for (int ix = 1; ix + 1 < n; ++ix)
      for (int iy = 1; iy + 1 < n; ++iy)
        for (int iz = 1; iz + 1 < n; ++iz) {
          const detail::Stencil st{gs, 0, it, ix, iy, iz};
          const cd grad[4] = {st.d1(0), -st.d1(1), -st.d1(2), -st.d1(3)};
          for (int c = 0; c < 4; ++c) {
            const cd diff = fb.at(c, it, ix, iy, iz) - fa.at(c, it, ix, iy, iz);
            worst = std::max(worst, std::abs(diff - grad[c]));
          }
        }
  CHECK(worst / scale < 5e-3);  // central-difference error at h = 0.05

  // the same comparison with the gradient synthesized analytically is exact
  PerceptionWaveFunction grad_section;
  grad_section.grid = g;
  grad_section.values.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i)
    grad_section.values[i] = zeta(g.node(i)) * gauge_line(g.node(i));
  const SpacetimeField fg = synthesize_potential(grad_section, n, h);
  double exact = 0.0;
  for (size_t i = 0; i < fg.data.size(); ++i)
    exact = std::max(exact, std::abs(fb.data[i] - fa.data[i] - fg.data[i]));
  CHECK(exact < 1e-13);
}
