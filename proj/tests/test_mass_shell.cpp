#include <catch2/catch_amalgamated.hpp>

#include "lightcone/mass_shell.hpp"

using namespace lightcone;

TEST_CASE("lift puts momenta on the shell", "[shell]") {
  const MomentumPoint p = lift(Eigen::Vector3d(0, 0, 1));
  CHECK((p.four_vector() - base_momentum()).cwiseAbs().maxCoeff() == 0.0);

  const MomentumPoint q = lift(Eigen::Vector3d(3, 4, 0));
  CHECK(q.p0 == 5.0);
  CHECK((q.four_vector() - four(5, 3, 4, 0)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(lift(Eigen::Vector3d::Zero()), ZeroMomentumError);
}

TEST_CASE("grid nodes are on-shell with positive weights", "[shell]") {
  const ShellGrid g = ShellGrid::build({16, 0.5, 4.0}, {64});
  REQUIRE(g.size() == 16 * 64);
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK(g.weight(i) > 0.0);
    const auto& n = g.node(i);
    CHECK(std::abs(n.p0 - n.p.norm()) < 1e-14);
    CHECK(n.p0 > 0.0);
    CHECK(std::abs(minkowski_inner(n.four_vector(), n.four_vector())) < 1e-12);
  }
  CHECK_THROWS_AS(ShellGrid::build({8, -1.0, 2.0}, {16}), std::invalid_argument);
  CHECK_THROWS_AS(ShellGrid::build({8, 2.0, 1.0}, {16}), std::invalid_argument);
}

TEST_CASE("constant over a finite window has closed-form measure", "[shell]") {
  const double rmin = 0.5, rmax = 4.0;
  const ShellGrid g = ShellGrid::build({24, rmin, rmax}, {96});
  const double expect = 4.0 * M_PI * (rmax * rmax - rmin * rmin) / 2.0;
  CHECK(g.total_weight() == Catch::Approx(expect).epsilon(1e-12));

  std::vector<cd> ones(g.size(), cd(1, 0));
  CHECK(integrate(ones, g).real() == Catch::Approx(expect).epsilon(1e-12));
}

TEST_CASE("radial exponential matches the analytic integral", "[shell]") {
  // Int e^{-p0} d mu = 4 pi Int r e^{-r} dr = 4 pi over [0, inf).
  const ShellGrid g = ShellGrid::build({120, 1e-8, 40.0}, {8});
  const cd got = integrate([](const MomentumPoint& p) { return cd(std::exp(-p.p0), 0); }, g);
  CHECK(std::abs(got.real() - 4.0 * M_PI) < 1e-4);
  CHECK(std::abs(got.imag()) == 0.0);
}

TEST_CASE("gaussian bump against a 1d radial oracle", "[shell]") {
  const double c = 2.0, sig = 0.35;
  auto f = [&](double r) { return std::exp(-(r - c) * (r - c) / (2 * sig * sig)); };

  // independent oracle: fine Simpson quadrature of 4 pi Int r f(r) dr
  const double a = 0.5, b = 4.0;
  const int n = 200000;
  const double h = (b - a) / n;
  double simpson = f(a) * a + f(b) * b;
  for (int i = 1; i < n; ++i) simpson += f(a + i * h) * (a + i * h) * (i % 2 ? 4.0 : 2.0);
  simpson *= 4.0 * M_PI * h / 3.0;

  const ShellGrid g = ShellGrid::build({60, a, b}, {32});
  const double got =
      integrate([&](const MomentumPoint& p) { return cd(f(p.p0), 0); }, g).real();
  CHECK(std::abs(got - simpson) < 1e-4 * std::abs(simpson));
}

TEST_CASE("integrate is linear and conjugate-symmetric as a pairing", "[shell]") {
  const ShellGrid g = ShellGrid::build({8, 0.5, 2.0}, {16});
  std::vector<cd> f(g.size()), h(g.size());
  SL2CSampler rng(99, 0.0);
  for (auto& v : f) v = cd(rng.uniform() - 0.5, rng.uniform() - 0.5);
  for (auto& v : h) v = cd(rng.uniform() - 0.5, rng.uniform() - 0.5);

  std::vector<cd> zero(g.size(), cd(0, 0));
  CHECK(integrate(zero, g) == cd(0, 0));

  std::vector<cd> fh(g.size()), hf(g.size()), sum(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    fh[i] = std::conj(f[i]) * h[i];
    hf[i] = std::conj(h[i]) * f[i];
    sum[i] = f[i] + h[i];
  }
  CHECK(std::abs(integrate(fh, g) - std::conj(integrate(hf, g))) < 1e-13);
  CHECK(std::abs(integrate(sum, g) - integrate(f, g) - integrate(h, g)) < 1e-13);

  std::vector<cd> bad(3);
  CHECK_THROWS_AS(integrate(bad, g), std::invalid_argument);
}

TEST_CASE("pushforward relabels nodes and keeps weights", "[shell]") {
  const ShellGrid g = ShellGrid::build({10, 0.5, 3.0}, {40});

  const ShellGrid same = g.pushforward(SL2CElement::Identity());
  for (size_t i = 0; i < g.size(); ++i) {
    CHECK((same.node(i).four_vector() - g.node(i).four_vector()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(same.weight(i) == g.weight(i));
  }

  // z-boost of the base point: (1,0,0,1) -> (e^u, 0, 0, e^u)
  const double u = 0.6;
  const SL2CElement bz = exp_algebra(u * generators().K3);
  const MomentumPoint moved = boost_point(bz, lift(Eigen::Vector3d(0, 0, 1)));
  CHECK((moved.four_vector() - four(std::exp(u), 0, 0, std::exp(u))).cwiseAbs().maxCoeff() <
        1e-12);

  SL2CSampler rng(123, 0.7);
  const ShellGrid pg = g.pushforward(rng.sample());
  CHECK(pg.total_weight() == g.total_weight());  // weights copied verbatim

  // a rotated grid integrates rotation-invariant integrands identically
  const ShellGrid rg = g.pushforward(rng.rotation());
  auto radial = [](const MomentumPoint& p) { return cd(std::exp(-p.p0), 0); };
  CHECK(std::abs(integrate(radial, rg) - integrate(radial, g)) < 1e-13);

  // <psi o L^-1, phi o L^-1> on the pushforward grid has identical summands
  std::vector<cd> v(g.size());
  for (size_t i = 0; i < g.size(); ++i) v[i] = cd(std::sin(0.1 * i), std::cos(0.2 * i));
  CHECK(integrate(v, pg) == integrate(v, g));
}

TEST_CASE("lorentz invariance of the integral within refinement error", "[shell]") {
  // smooth bump supported in r in [1, 3]
  auto bump = [](const MomentumPoint& p) {
    const double r = p.p0;
    if (r <= 1.0 || r >= 3.0) return cd(0, 0);
    const double t = (r - 1.0) / 2.0;
    return cd(std::exp(-1.0 / (t * (1.0 - t))), 0);
  };
  const SL2CElement lam = random_sl2c(3141, 0.5);

  const ShellGrid coarse = ShellGrid::build({40, 0.2, 8.0}, {1000});
  const ShellGrid fine = ShellGrid::build({60, 0.2, 8.0}, {2000});

  auto boosted = [&](const MomentumPoint& p) { return bump(boost_point(lam.inverse().eval(), p)); };

  const double i_coarse = integrate(bump, coarse).real();
  const double i_fine = integrate(bump, fine).real();
  const double i_boost = integrate(boosted, fine).real();

  const double refinement = std::abs(i_fine - i_coarse);
  CHECK(std::abs(i_boost - i_fine) < 50.0 * refinement + 1e-10);
}
