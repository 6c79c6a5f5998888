#include <catch2/catch_amalgamated.hpp>

#include "lightcone/graviton.hpp"
#include "lightcone/photon.hpp"
#include "lightcone/spin_tower.hpp"

using namespace lightcone;

namespace {
MomentumPoint off_ray_point(SL2CSampler& rng) {
  while (true) {
    const Eigen::Vector3d d = rng.direction();
    if (d[2] > -0.995) return lift((0.5 + 3.5 * rng.uniform()) * d);
  }
}
}  // namespace

TEST_CASE("photon and graviton models validate", "[perception]") {
  for (const auto& m : {build_photon_model(), build_graviton_model()}) {
    const ValidationReport rep = validate_model(m);
    INFO(m.name);
    CHECK(rep.epsilon_isometry < 1e-10);
    CHECK(rep.w_orthonormality < 1e-10);
    CHECK(rep.w_invariance < 1e-10);
    CHECK(rep.mod_w < 1e-10);
    CHECK(rep.phi_homomorphism < 1e-10);
    CHECK_NOTHROW(ensure_valid(m));
  }
}

TEST_CASE("broken embedding is rejected by name", "[perception]") {
  PerceptionModel bad = build_photon_model();
  bad.epsilon *= 2.0;
  CHECK_THROWS_MATCHES(ensure_valid(bad), ModelError,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("isometry")));
}

TEST_CASE("fiber frames at the base point and well-definedness", "[perception]") {
  const PerceptionModel m = build_photon_model();
  const MomentumPoint p0 = lift(Eigen::Vector3d(0, 0, 1));

  // at p0 the fiber data is R and W themselves
  const FiberFrame f0 = fiber_at(m, p0);
  Eigen::MatrixXcd rw(4, 3);
  rw << m.w_basis, m.epsilon;
  CHECK((f0.f_basis - rw).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((f0.d_basis - m.w_basis).cwiseAbs().maxCoeff() < 1e-14);

  // fiber projectors do not depend on the K-twist of the representative
  SL2CSampler rng(31, 1.0);
  for (const auto& model : {build_photon_model(), build_graviton_model()}) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
      const MomentumPoint p = off_ray_point(rng);
      const LittleGroupElement B = random_little(rng);
      const Eigen::MatrixXcd phiA = model.phi(SL2CElement(standard_boost(p) * B.matrix()));
      Eigen::MatrixXcd twisted(model.dim_v, model.dim_w() + 2);
      twisted << phiA * model.w_basis, phiA * model.epsilon;
      const FiberFrame f = fiber_at(model, p);
      worst = std::max(worst, (span_projector(f.f_basis) - span_projector(twisted))
                                  .cwiseAbs().maxCoeff());
      worst = std::max(worst, (span_projector(f.d_basis) -
                               span_projector((phiA * model.w_basis).eval()))
                                  .cwiseAbs().maxCoeff());
    }
    INFO(model.name);
    CHECK(worst < 1e-9);
  }

  // ranks: dim F = dim W + 2, dim D = dim W
  for (const auto& model :
       {build_photon_model(), build_graviton_model(), build_spin_model(3)}) {
    const FiberFrame f = fiber_at(model, off_ray_point(rng));
    CHECK(numerical_rank(f.f_basis) == model.dim_w() + 2);
    CHECK(numerical_rank(f.d_basis) == model.dim_w());
  }
}

TEST_CASE("canonical representative", "[perception]") {
  const PerceptionModel m = build_photon_model();
  SL2CSampler rng(32, 1.0);
  const MomentumPoint p = off_ray_point(rng);
  const FiberFrame f = fiber_at(m, p);

  // gauge directions are annihilated
  const Eigen::VectorXcd d = f.d_basis.col(0);
  CHECK(canonical_rep(m, p, d).cwiseAbs().maxCoeff() < 1e-10);

  // the canonical subspace is fixed
  const Eigen::VectorXcd z =
      m.phi(standard_boost(p)) * m.epsilon * Eigen::Vector2cd(0.3, cd(0, -1));
  CHECK((canonical_rep(m, p, z) - z).cwiseAbs().maxCoeff() < 1e-12);

  // idempotent, and constant on gauge cosets
  const Eigen::VectorXcd mixed = z + cd(1.7, -0.4) * d;
  const Eigen::VectorXcd rep = canonical_rep(m, p, mixed);
  CHECK((rep - canonical_rep(m, p, rep)).cwiseAbs().maxCoeff() < 1e-11);
  CHECK((rep - z).cwiseAbs().maxCoeff() < 1e-10);

  // the projector restricted to F_p has rank 2, killing exactly D_p
  const Eigen::MatrixXcd killed = f.canonical_projector * f.f_basis;
  CHECK(numerical_rank(killed) == 2);

  // membership is enforced
  Eigen::VectorXcd outside = Eigen::VectorXcd::Zero(4);
  outside[0] = 1.0;
  CHECK_THROWS_AS(canonical_rep(m, p, outside), ModelError);
}

TEST_CASE("quotient metric properties", "[perception]") {
  const PerceptionModel m = build_photon_model();
  const MomentumPoint p0 = lift(Eigen::Vector3d(0, 0, 1));

  // isometric at the base point
  CHECK(std::abs(quotient_metric(m, p0, m.epsilon.col(0), m.epsilon.col(0)) - cd(1, 0)) <
        1e-14);
  CHECK(std::abs(quotient_metric(m, p0, m.epsilon.col(0), m.epsilon.col(1))) < 1e-14);

  // gauge invariance in both slots, Hermitian symmetry
  SL2CSampler rng(33, 1.0);
  const MomentumPoint p = off_ray_point(rng);
  const FiberFrame f = fiber_at(m, p);
  const Eigen::VectorXcd z = f.f_basis * Eigen::Vector3cd(0.2, cd(0, 1.1), -0.7);
  const Eigen::VectorXcd w = f.f_basis * Eigen::Vector3cd(cd(0.9, 0.3), 0.1, cd(0, -2));
  const Eigen::VectorXcd d = f.d_basis.col(0);
  CHECK(std::abs(quotient_metric(m, p, (z + 3.1 * d).eval(), w) -
                 quotient_metric(m, p, z, w)) < 1e-12);
  CHECK(std::abs(quotient_metric(m, p, z, (w + cd(0, 2) * d).eval()) -
                 quotient_metric(m, p, z, w)) < 1e-12);
  CHECK(std::abs(quotient_metric(m, p, z, w) - std::conj(quotient_metric(m, p, w, z))) <
        1e-13);

  // K acts unitarily on the quotient at the base point (photon, graviton)
  for (const auto& model : {build_photon_model(), build_graviton_model()}) {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const LittleGroupElement B = random_little(rng);
      const Eigen::MatrixXcd phiB = model.phi(B.matrix());
      const Eigen::VectorXcd zb = model.epsilon * Eigen::Vector2cd(0.4, cd(0.1, -0.8));
      const Eigen::VectorXcd wb = model.epsilon * Eigen::Vector2cd(cd(0, 1), 0.5);
      worst = std::max(
          worst, std::abs(quotient_metric(model, p0, (phiB * zb).eval(), (phiB * wb).eval()) -
                          quotient_metric(model, p0, zb, wb)));
    }
    INFO(model.name);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("primitive bundle isometry for photon and graviton", "[perception]") {
  CHECK(primitive_isometry_check(build_photon_model(), 1000) < 1e-9);
  CHECK(primitive_isometry_check(build_graviton_model(), 1000) < 1e-9);
}

TEST_CASE("potential action is a group action mapping gauge to gauge", "[perception]") {
  const PerceptionModel m = build_graviton_model();
  SL2CSampler rng(34, 1.0);
  const MomentumPoint p = off_ray_point(rng);
  const FiberFrame f = fiber_at(m, p);
  Eigen::VectorXcd comb(5);
  comb << 0.4, cd(0, -0.3), 1.1, cd(0.2, 0.2), -0.6;
  const Eigen::VectorXcd z = f.f_basis * comb;

  // identity
  const auto [pi, zi] = potential_action(m, FourVector::Zero(), SL2CElement::Identity(), p, z);
  CHECK((zi - z).cwiseAbs().maxCoeff() < 1e-13);

  // pure translation is a node phase
  const FourVector a = four(0.4, -0.2, 0.1, 0.9);
  const auto [pt, zt] = potential_action(m, a, SL2CElement::Identity(), p, z);
  const double ph = -minkowski_inner(p.four_vector(), a);
  CHECK((zt - cd(std::cos(ph), std::sin(ph)) * z).cwiseAbs().maxCoeff() < 1e-12);

  // composition within 1e-9
  const SL2CElement l1 = rng.sample(), l2 = rng.sample();
  const FourVector a1 = four(0.1, 0.3, -0.2, 0.5), a2 = four(-0.4, 0.0, 0.2, 0.1);
  const auto [q2, step2] = potential_action(m, a2, l2, p, z);
  const auto [q12, two_step] = potential_action(m, a1, l1, q2, step2);
  const FourVector a12 = a1 + kappa(l1) * a2;
  const auto [q, one_step] = potential_action(m, a12, SL2CElement(l1 * l2), p, z);
  CHECK((two_step - one_step).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((q12.four_vector() - q.four_vector()).cwiseAbs().maxCoeff() < 1e-12);

  // gauge equivariance: D_p maps into D_{Lambda p}
  const auto [qd, moved_d] =
      potential_action(m, FourVector::Zero(), l1, p, Eigen::VectorXcd(f.d_basis.col(1)));
  const FiberFrame fq = fiber_at(m, qd);
  const Eigen::MatrixXcd pd = span_projector(fq.d_basis);
  CHECK((moved_d - pd * moved_d).cwiseAbs().maxCoeff() / moved_d.cwiseAbs().maxCoeff() <
        1e-10);
}

TEST_CASE("perception representation is unitary and composes", "[perception]") {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({8, 0.5, 4.0}, {48});
  auto profile = [](const MomentumPoint& p) {
    return cd(std::exp(-(p.p0 - 1.5) * (p.p0 - 1.5)), 0.1 * p.p[0]);
  };
  const PerceptionWaveFunction psi = make_section(m, g, profile, {cd(0.8, 0), cd(0.3, 0.4)});

  // identity acts trivially
  const PerceptionWaveFunction same =
      apply_perception_rep(m, FourVector::Zero(), SL2CElement::Identity(), psi);
  for (size_t i = 0; i < psi.values.size(); ++i)
    CHECK((same.values[i] - psi.values[i]).cwiseAbs().maxCoeff() < 1e-13);

  // norm preservation under a random group element
  SL2CSampler rng(35, 1.0);
  const SL2CElement lam = rng.sample();
  const FourVector a = four(0.2, -0.7, 0.4, 0.0);
  const PerceptionWaveFunction moved = apply_perception_rep(m, a, lam, psi);
  CHECK(perception_norm_squared(m, moved) ==
        Catch::Approx(perception_norm_squared(m, psi)).epsilon(1e-9));

  // group law holds exactly on lifts
  const SL2CElement l2 = rng.sample();
  const FourVector a2 = four(-0.1, 0.2, 0.3, -0.5);
  const PerceptionWaveFunction two_step =
      apply_perception_rep(m, a, lam, apply_perception_rep(m, a2, l2, psi));
  const PerceptionWaveFunction one_step =
      apply_perception_rep(m, a + (kappa(lam) * a2).eval(), SL2CElement(lam * l2), psi);
  double worst = 0.0;
  for (size_t i = 0; i < psi.values.size(); ++i)
    worst = std::max(worst, (two_step.values[i] - one_step.values[i]).cwiseAbs().maxCoeff());
  CHECK(worst < 1e-9);

  // adding a gauge section leaves all h-inner products unchanged
  PerceptionWaveFunction shifted = psi;
  for (size_t i = 0; i < shifted.values.size(); ++i)
    shifted.values[i] += profile(g.node(i)) * gauge_line(g.node(i));
  CHECK(std::abs(perception_inner(m, shifted, psi) - perception_inner(m, psi, psi)) < 1e-10);
  CHECK(perception_norm_squared(m, shifted) ==
        Catch::Approx(perception_norm_squared(m, psi)).epsilon(1e-10));
}
