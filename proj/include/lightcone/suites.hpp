// Per-module verification sweeps behind the `verify` subcommand. Every
// record carries a short anchor naming the identity it exercises; sweeps are
// seeded from the run configuration and fully deterministic.
#pragma once

#include "lightcone/chern.hpp"
#include "lightcone/parity.hpp"
#include "lightcone/registry.hpp"
#include "lightcone/report.hpp"

namespace lightcone::suites {

inline MomentumPoint sample_point(SL2CSampler& rng, double zmin = -0.995) {
  while (true) {
    const Eigen::Vector3d d = rng.direction();
    if (d[2] > zmin) return lift((0.5 + 3.5 * rng.uniform()) * d);
  }
}

inline Report core(const RunConfig& cfg) {
  Report rep{"core", {}};
  SL2CSampler rng(cfg.seed, 1.0);
  const int n = cfg.sweep_samples;

  double eta_def = 0, hom = 0, two_one = 0, det_tilde = 0;
  for (int t = 0; t < n; ++t) {
    const SL2CElement a = rng.sample(), b = rng.sample();
    const LorentzMatrix ka = kappa(a);
    eta_def = std::max(eta_def, lorentz_defect(ka));
    eta_def = std::max(eta_def, std::abs(ka.determinant() - 1.0));
    eta_def = std::max(eta_def, std::max(0.0, 1.0 - ka(0, 0)));
    hom = std::max(hom, (kappa(SL2CElement(a * b)) - ka * kappa(b)).cwiseAbs().maxCoeff());
    two_one = std::max(two_one, (kappa(SL2CElement(-a)) - ka).cwiseAbs().maxCoeff());

    const FourVector x = four(rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform() - 0.5,
                              rng.uniform() - 0.5);
    det_tilde = std::max(det_tilde,
                         std::abs(tilde(x).determinant() - cd(minkowski_inner(x, x), 0)));
  }
  rep.add("metric-preservation", "double cover lands in the restricted Lorentz group",
          eta_def, cfg.tol("double_cover", 1e-10));
  rep.add("homomorphism", "kappa of a product is the product of images", hom,
          cfg.tol("double_cover", 1e-10));
  rep.add("two-to-one", "kappa identifies antipodal elements", two_one, 0.0);
  rep.add("det-tilde", "determinant of the Hermitian encoding is the Minkowski norm",
          det_tilde, cfg.tol("det_tilde", 1e-12));

  const double th = 0.77;
  Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
  diag(0, 0) = std::exp(cd(0, -th / 2));
  diag(1, 1) = std::exp(cd(0, th / 2));
  rep.add("rotation-convention",
          "exp(theta J3) is diag(e^{-i theta/2}, e^{i theta/2})",
          (exp_algebra(th * generators().J3) - diag).cwiseAbs().maxCoeff(),
          cfg.tol("exp_convention", 1e-12));
  rep.add("full-turn", "exp(2 pi J3) = -1 in the double cover",
          (exp_algebra(2 * M_PI * generators().J3) + Eigen::Matrix2cd::Identity())
              .cwiseAbs().maxCoeff(),
          cfg.tol("exp_convention", 1e-12));
  return rep;
}

inline Report little_group(const RunConfig& cfg) {
  Report rep{"little-group", {}};
  SL2CSampler rng(cfg.seed + 1, 0.0);
  const int n = cfg.sweep_samples;

  double stab = 0, e2hom = 0, mult = 0, modulus = 0, kbar = 0;
  for (int t = 0; t < n; ++t) {
    const LittleGroupElement a = random_little(rng), b = random_little(rng);
    stab = std::max(stab, ((kappa(a.matrix()) * base_momentum()).eval() - base_momentum())
                              .cwiseAbs().maxCoeff());
    const auto [wa, ua] = e2_cover(a);
    const auto [wb, ub] = e2_cover(b);
    const auto [wp, up] = e2_cover(a * b);
    e2hom = std::max(e2hom, std::abs(wp - (wa + ua * wb)));
    e2hom = std::max(e2hom, std::abs(up - ua * ub));
    for (int ts : {1, 2, 4}) {
      const Helicity s(ts);
      mult = std::max(mult, std::abs(eta(s, a * b) - eta(s, a) * eta(s, b)));
      modulus = std::max(modulus, std::abs(std::abs(eta(s, a)) - 1.0));
      mult = std::max(mult, std::abs(eta(s, a) - eta(s, {a.z, cd(0, 0)})));
    }
    kbar = std::max(kbar, std::abs(decompose_little_bar(
                              SL2CElement(a.matrix().adjoint().inverse()), 1e-9).z - a.z));
  }
  rep.add("stabilizer", "upper-triangular unit-diagonal-modulus matrices fix p0", stab,
          cfg.tol("stabilizer", 1e-10));
  rep.add("e2-cover", "the (zb, z^2) map is multiplicative into C x| U(1)", e2hom,
          cfg.tol("e2_cover", 1e-12));
  rep.add("characters", "z^{2s} is multiplicative and independent of b", mult,
          cfg.tol("characters", 1e-12));
  rep.add("character-modulus", "characters take unit-circle values", modulus,
          cfg.tol("characters", 1e-14));
  rep.add("opposite-group", "adjoint-inverse maps K onto the lower-triangular stabilizer",
          kbar, cfg.tol("characters", 1e-12));

  double j3 = 0;
  for (int ts : {0, 1, 2, 4, 6}) {
    const Helicity s(ts);
    const double h = 1e-4;
    const cd plus = eta(s, decompose_little(exp_algebra(h * generators().J3)));
    const cd minus = eta(s, decompose_little(exp_algebra(-h * generators().J3)));
    j3 = std::max(j3, std::abs(cd(0, 1) * (plus - minus) / (2 * h) - cd(j3_eigenvalue(s), 0)));
  }
  rep.add("j3-eigenvalue", "derivative of the character along the z-rotation is s", j3,
          cfg.tol("j3_eigenvalue", 1e-6));
  return rep;
}

inline Report boosting(const RunConfig& cfg) {
  Report rep{"boosting", {}};
  SL2CSampler rng(cfg.seed + 2, 1.0);
  const int n = cfg.sweep_samples;

  double section = 0, member = 0, cocycle = 0;
  for (int t = 0; t < n; ++t) {
    const MomentumPoint p = sample_point(rng);
    section = std::max(section, ((kappa(standard_boost(p)) * base_momentum()).eval() -
                                 p.four_vector()).cwiseAbs().maxCoeff());
    const SL2CElement l1 = rng.sample(), l2 = rng.sample();
    member = std::max(member, std::abs(wigner(l1, p).matrix().determinant() - cd(1, 0)));
    cocycle = std::max(
        cocycle, (wigner(SL2CElement(l1 * l2), p).matrix() -
                  (wigner(l1, boost_point(l2, p)) * wigner(l2, p)).matrix())
                     .cwiseAbs().maxCoeff());
  }
  rep.add("section", "the standard boost maps the base momentum to p", section,
          cfg.tol("section", 1e-10));
  rep.add("wigner-membership", "Wigner transformations decompose in the little group",
          member, cfg.tol("membership", 1e-10));
  rep.add("cocycle", "Wigner transformations satisfy the composition cocycle", cocycle,
          cfg.tol("cocycle", 1e-9));

  // representation checks on a small grid
  const ShellGrid g = ShellGrid::build({8, cfg.radial.r_min, cfg.radial.r_max}, {32});
  BoostingWaveFunction psi;
  psi.grid = g;
  psi.values.resize(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    const auto& q = g.node(i);
    psi.values[i] =
        std::exp(-(q.p0 - 1.5) * (q.p0 - 1.5)) *
        Eigen::Vector2cd(cd(1, 0.2 * q.p[0]), cd(0.5, -0.3 * q.p[1]));
  }
  const Helicity s(2);
  const SL2CElement l1 = rng.sample(), l2 = rng.sample();
  const FourVector a1 = four(0.2, 0.4, -0.3, 0.1), a2 = four(-0.5, 0.1, 0.2, 0.6);
  const BoostingWaveFunction moved = apply_boosting_rep(a1, l1, s, psi);
  rep.add("norm-preservation", "the helicity representation is a unitary relabeling",
          std::abs(moved.norm_squared() - psi.norm_squared()) / psi.norm_squared(),
          cfg.tol("norm_preservation", 1e-12));

  const BoostingWaveFunction two_step = apply_boosting_rep(a1, l1, s,
                                                           apply_boosting_rep(a2, l2, s, psi));
  const BoostingWaveFunction one_step =
      apply_boosting_rep(a1 + (kappa(l1) * a2).eval(), SL2CElement(l1 * l2), s, psi);
  double group_law = 0;
  for (size_t i = 0; i < psi.values.size(); ++i)
    group_law = std::max(group_law,
                         (two_step.values[i] - one_step.values[i]).cwiseAbs().maxCoeff());
  rep.add("group-law", "the helicity representation composes", group_law,
          cfg.tol("group_law", 1e-9));

  const Eigen::Matrix2cd tau = helicity_reduced_density(psi);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(tau);
  rep.add("density-hermitian", "reduced density matrices are Hermitian with unit trace",
          std::max((tau - tau.adjoint()).cwiseAbs().maxCoeff(),
                   std::abs(tau.trace() - cd(1, 0))),
          cfg.tol("density", 1e-12));
  rep.add("density-psd", "reduced density matrices are positive semidefinite",
          std::max(0.0, -es.eigenvalues().minCoeff()), cfg.tol("density", 1e-12));
  return rep;
}

inline Report perception(const RunConfig& cfg) {
  Report rep{"perception", {}};
  SL2CSampler rng(cfg.seed + 3, 1.0);

  for (const char* name : {"photon", "graviton"}) {
    const PerceptionModel m = make_model(name);
    const ValidationReport v = validate_model(m, cfg.sweep_samples, cfg.seed + 4);
    rep.add(std::string(name) + "-hypotheses",
            "embedding isometry, gauge invariance, and the character intertwine", v.worst(),
            cfg.tol("model_hypotheses", 1e-10));

    double well_defined = 0;
    for (int t = 0; t < 50; ++t) {
      const MomentumPoint p = sample_point(rng);
      const LittleGroupElement B = random_little(rng);
      const Eigen::MatrixXcd phiA = m.phi(SL2CElement(standard_boost(p) * B.matrix()));
      const FiberFrame f = fiber_at(m, p);
      well_defined = std::max(
          well_defined, (span_projector(f.d_basis) -
                         span_projector((phiA * m.w_basis).eval())).cwiseAbs().maxCoeff());
    }
    rep.add(std::string(name) + "-fiber-well-defined",
            "gauge fibers are independent of the boost representative", well_defined,
            cfg.tol("fiber_well_defined", 1e-9));

    rep.add(std::string(name) + "-isometry",
            "quotient metric reproduces the primitive inner product",
            primitive_isometry_check(m, cfg.sweep_samples, cfg.seed + 5),
            cfg.tol("isometry", 1e-9));
  }

  // unitarity and the group law for the photon model on a small grid
  const PerceptionModel m = make_model("photon");
  const ShellGrid g = ShellGrid::build({8, cfg.radial.r_min, cfg.radial.r_max}, {32});
  const PerceptionWaveFunction psi = make_section(
      m, g,
      [](const MomentumPoint& p) {
        return cd(std::exp(-(p.p0 - 1.5) * (p.p0 - 1.5)), 0.2);
      },
      {cd(0.8, 0.1), cd(0.3, -0.4)});
  const SL2CElement l1 = rng.sample(), l2 = rng.sample();
  const FourVector a1 = four(0.3, -0.2, 0.5, 0.0), a2 = four(0.1, 0.2, -0.6, 0.4);
  const PerceptionWaveFunction moved = apply_perception_rep(m, a1, l1, psi);
  rep.add("rep-unitary", "the induced representation preserves the discrete norm",
          std::abs(perception_norm_squared(m, moved) - perception_norm_squared(m, psi)) /
              perception_norm_squared(m, psi),
          cfg.tol("norm_preservation", 1e-9));
  const PerceptionWaveFunction two_step =
      apply_perception_rep(m, a1, l1, apply_perception_rep(m, a2, l2, psi));
  const PerceptionWaveFunction one_step =
      apply_perception_rep(m, a1 + (kappa(l1) * a2).eval(), SL2CElement(l1 * l2), psi);
  double law = 0;
  for (size_t i = 0; i < psi.values.size(); ++i)
    law = std::max(law, (two_step.values[i] - one_step.values[i]).cwiseAbs().maxCoeff());
  rep.add("rep-group-law", "the potential action composes on lifts", law,
          cfg.tol("group_law", 1e-9));
  return rep;
}

inline Report photon(const RunConfig& cfg) {
  Report rep{"photon", {}};
  SL2CSampler rng(cfg.seed + 6, 1.0);
  const PerceptionModel m = make_model("photon");

  double transverse = 0, line = 0;
  for (int t = 0; t < 200; ++t) {
    const MomentumPoint p = sample_point(rng);
    const FiberFrame f = fiber_at(m, p);
    for (int c = 0; c < f.f_basis.cols(); ++c)
      transverse = std::max(transverse, transversality_check(p, f.f_basis.col(c)));
    Eigen::MatrixXcd lm(4, 1);
    lm.col(0) = gauge_line(p);
    line = std::max(line,
                    (span_projector(lm) - span_projector(f.d_basis)).cwiseAbs().maxCoeff());
  }
  rep.add("transversality", "fiber vectors satisfy the momentum contraction", transverse,
          cfg.tol("transversality", 1e-10));
  rep.add("gauge-line", "the gauge fiber is the complex momentum line", line,
          cfg.tol("gauge_line", 1e-10));

  const Eigen::Vector4cd p0c = base_momentum().cast<cd>();
  const Eigen::Vector4cd ep = std::sqrt(2.0) * circular_polarization(+1);
  const Eigen::Vector4cd em = std::sqrt(2.0) * circular_polarization(-1);
  double mod_w = 0;
  for (int t = 0; t < cfg.sweep_samples; ++t) {
    const LittleGroupElement B = random_little(rng);
    const Eigen::MatrixXcd phiB = m.phi(B.matrix());
    mod_w = std::max(mod_w, ((phiB * ep).eval() - B.z * B.z * ep -
                             std::conj(B.b) * B.z * p0c).cwiseAbs().maxCoeff());
    mod_w = std::max(mod_w, ((phiB * em).eval() - std::conj(B.z) * std::conj(B.z) * em -
                             B.b * std::conj(B.z) * p0c).cwiseAbs().maxCoeff());
  }
  rep.add("mod-w-coefficients",
          "polarizations expand with coefficients z^2, conj(b) z over the gauge vector",
          mod_w, cfg.tol("mod_w", 1e-12));

  const ShellGrid g = ShellGrid::build({8, cfg.radial.r_min, cfg.radial.r_max}, {32});
  auto packet = [](const MomentumPoint& p) {
    return cd(std::exp(-2.0 * (p.p0 - 1.5) * (p.p0 - 1.5)), 0);
  };
  const PerceptionWaveFunction psi = make_section(m, g, packet, {cd(1, 0), cd(0.4, 0.2)});
  double momentum_identity = 0;
  for (size_t i = 0; i < g.size(); ++i)
    momentum_identity =
        std::max(momentum_identity, transversality_check(g.node(i), psi.values[i]));
  rep.add("momentum-divergence", "sections contract to zero against the momentum",
          momentum_identity, cfg.tol("momentum_identity", 1e-12));

  std::vector<double> wave, lorenz;
  for (const double h : {0.16, 0.08, 0.04}) {
    const VectorFieldResiduals r = pde_residuals(synthesize_potential(psi, 9, h));
    wave.push_back(r.wave);
    lorenz.push_back(r.lorenz);
  }
  const double order_wave = std::log2(wave[0] / wave[2]) / 2.0;
  const double order_lorenz = std::log2(lorenz[0] / lorenz[2]) / 2.0;
  rep.add("wave-order", "d'Alembertian residuals shrink at second order",
          std::max(0.0, 2.2 - order_wave), cfg.tol("order_margin", 0.3));
  rep.add("lorenz-order", "divergence residuals shrink at second order",
          std::max(0.0, 2.2 - order_lorenz), cfg.tol("order_margin", 0.3));
  return rep;
}

inline Report graviton(const RunConfig& cfg) {
  Report rep{"graviton", {}};
  SL2CSampler rng(cfg.seed + 7, 1.0);
  const PerceptionModel m = make_model("graviton");
  const PerceptionModel ph = make_model("photon");

  double cond = 0, gauge = 0;
  for (int t = 0; t < 100; ++t) {
    const MomentumPoint p = sample_point(rng);
    const FiberFrame f = fiber_at(m, p);
    for (int c = 0; c < f.f_basis.cols(); ++c) {
      const TensorConditionResiduals r =
          tensor_conditions(p, tensor_unflatten(f.f_basis.col(c)));
      cond = std::max({cond, r.symmetric, r.transverse, r.traceless});
    }
    gauge = std::max(gauge, (span_projector(gauge_subspace(ph, p)) -
                             span_projector(f.d_basis)).cwiseAbs().maxCoeff());
  }
  rep.add("tensor-conditions", "fibers are symmetric, transverse, and eta-traceless", cond,
          cfg.tol("tensor_conditions", 1e-10));
  rep.add("gauge-subspace", "the gauge fiber is the symmetrized momentum products", gauge,
          cfg.tol("gauge_subspace", 1e-9));

  const Eigen::Vector4cd p0c = base_momentum().cast<cd>();
  const Eigen::Vector4cd ep = std::sqrt(2.0) * circular_polarization(+1);
  const Eigen::Vector4cd em = std::sqrt(2.0) * circular_polarization(-1);
  const Eigen::VectorXcd pp = tensor_product(p0c, p0c);
  const Eigen::VectorXcd pe_p = tensor_product(p0c, ep) + tensor_product(ep, p0c);
  const Eigen::VectorXcd pe_m = tensor_product(p0c, em) + tensor_product(em, p0c);
  double mod_w = 0;
  for (int t = 0; t < cfg.sweep_samples; ++t) {
    const LittleGroupElement B = random_little(rng);
    const Eigen::MatrixXcd phiB = m.phi(B.matrix());
    const cd z = B.z, b = B.b, bz = std::conj(b) * z, cz = std::conj(z);
    mod_w = std::max(mod_w,
                     ((phiB * tensor_product(ep, ep)).eval() -
                      unit_power(z, 4) * tensor_product(ep, ep) -
                      std::conj(b) * z * z * z * pe_p - bz * bz * pp).cwiseAbs().maxCoeff());
    mod_w = std::max(mod_w,
                     ((phiB * tensor_product(em, em)).eval() -
                      unit_power(cz, 4) * tensor_product(em, em) - b * cz * cz * cz * pe_m -
                      (b * cz) * (b * cz) * pp).cwiseAbs().maxCoeff());
  }
  rep.add("mod-w-coefficients",
          "tensor polarizations expand with conj(b) z^3 and (conj(b) z)^2", mod_w,
          cfg.tol("mod_w", 1e-12));

  const ShellGrid g = ShellGrid::build({8, cfg.radial.r_min, cfg.radial.r_max}, {32});
  auto packet = [](const MomentumPoint& p) {
    return cd(std::exp(-2.0 * (p.p0 - 1.5) * (p.p0 - 1.5)), 0);
  };
  const PerceptionWaveFunction psi = make_section(m, g, packet, {cd(1, 0), cd(0, 0.6)});
  double momentum_identity = 0;
  for (size_t i = 0; i < g.size(); ++i) {
    const TensorConditionResiduals r =
        tensor_conditions(g.node(i), tensor_unflatten(psi.values[i]));
    momentum_identity = std::max({momentum_identity, r.symmetric, r.transverse, r.traceless});
  }
  rep.add("momentum-identities", "sections are symmetric, transverse, traceless per node",
          momentum_identity, cfg.tol("momentum_identity", 1e-12));

  std::vector<double> wave, div;
  for (const double h : {0.16, 0.08, 0.04}) {
    const TensorFieldResiduals r = tt_residuals(synthesize_perturbation(psi, 9, h));
    wave.push_back(r.wave);
    div.push_back(r.divergence);
  }
  rep.add("wave-order", "tensor d'Alembertian residuals shrink at second order",
          std::max(0.0, 2.2 - std::log2(wave[0] / wave[2]) / 2.0),
          cfg.tol("order_margin", 0.3));
  rep.add("divergence-order", "tensor divergence residuals shrink at second order",
          std::max(0.0, 2.2 - std::log2(div[0] / div[2]) / 2.0),
          cfg.tol("order_margin", 0.3));
  return rep;
}

inline Report spin(const RunConfig& cfg) {
  Report rep{"spin", {}};
  SL2CSampler rng(cfg.seed + 8, 1.0);

  double expansion = 0;
  for (int ts : {1, 2, 4, 6}) {
    const PerceptionModel m = make_model("spin:" + std::to_string(ts));
    for (int t = 0; t < cfg.sweep_samples / 4; ++t) {
      const LittleGroupElement B = random_little(rng);
      const Eigen::VectorXcd minus = m.phi(B.matrix()) * m.epsilon.col(1);
      for (int l = 0; l <= ts; ++l) {
        const cd expect = binomial(ts, l) * std::pow(B.b, l) *
                          std::pow(std::conj(B.z), ts - l);
        const int row = ts - l;
        expansion = std::max(
            expansion, std::abs(minus[row] * std::sqrt(binomial(ts, row)) - expect));
      }
      const Eigen::VectorXcd plus = m.phi(B.matrix()) * m.epsilon.col(0);
      expansion = std::max(
          expansion, (plus - unit_power(B.z, ts) * m.epsilon.col(0)).cwiseAbs().maxCoeff());
    }
  }
  rep.add("binomial-expansion",
          "the lowered extremal monomial expands with binomial coefficients", expansion,
          cfg.tol("mod_w", 1e-12));

  double rank_defect = 0;
  for (int ts = 1; ts <= 6; ++ts) {
    const PerceptionModel m = make_model("spin:" + std::to_string(ts));
    for (int t = 0; t < 10; ++t) {
      const FiberFrame f = fiber_at(m, sample_point(rng));
      rank_defect = std::max(
          rank_defect,
          static_cast<double>(std::abs(numerical_rank(f.d_basis) - gauge_dimension(ts)) +
                              std::abs(numerical_rank(f.f_basis) - (ts + 1))));
    }
  }
  rep.add("gauge-dimension", "gauge fibers have dimension 2s - 1 and full potential rank",
          rank_defect, 0.0);

  double spectrum = 0;
  for (int ts : {1, 2, 4, 6}) {
    const Eigen::VectorXd spec = j3_spectrum(ts);
    for (int k = 0; k <= ts; ++k)
      spectrum = std::max(spectrum, std::abs(spec[k] - (0.5 * ts - k)));
  }
  rep.add("j3-spectrum", "weights run from +s down to -s", spectrum,
          cfg.tol("j3_eigenvalue", 1e-6));

  double hom = 0;
  for (int t = 0; t < 100; ++t) {
    const SL2CElement a = rng.sample(), b = rng.sample();
    for (int ts : {2, 3, 6}) {
      const Eigen::MatrixXcd lhs = sym_power_matrix(ts, SL2CElement(a * b));
      const Eigen::MatrixXcd rhs = sym_power_matrix(ts, a) * sym_power_matrix(ts, b);
      hom = std::max(hom, (lhs - rhs).cwiseAbs().maxCoeff() /
                              std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    }
  }
  rep.add("multiplicative", "symmetric powers compose", hom, cfg.tol("homomorphism", 1e-10));

  // matched metric agreement with photon/graviton on rotation representatives
  const PerceptionModel t2 = make_model("spin:2"), ph = make_model("photon");
  const PerceptionModel t4 = make_model("spin:4"), gr = make_model("graviton");
  SL2CSampler rot_rng(cfg.seed + 9, 0.0);
  double matched = 0;
  for (int t = 0; t < 200; ++t) {
    const SL2CElement r = rot_rng.rotation();
    const MomentumPoint p = boost_point(r, lift(Eigen::Vector3d(0, 0, 1)));
    if (p.p[2] / p.p0 < -0.995) continue;
    const Eigen::Vector2cd v(rot_rng.disc(), rot_rng.disc());
    const Eigen::Vector2cd w(rot_rng.disc(), rot_rng.disc());
    auto pair_gap = [&](const PerceptionModel& a, const PerceptionModel& b) {
      const cd ha = quotient_metric(a, p, (a.phi(r) * a.epsilon * v).eval(),
                                    (a.phi(r) * a.epsilon * w).eval());
      const cd hb = quotient_metric(b, p, (b.phi(r) * b.epsilon * v).eval(),
                                    (b.phi(r) * b.epsilon * w).eval());
      return std::abs(ha - hb);
    };
    matched = std::max(matched, pair_gap(t2, ph));
    matched = std::max(matched, pair_gap(t4, gr));
  }
  rep.add("matched-metrics",
          "tower metrics agree with the Minkowski models on rotation representatives",
          matched, cfg.tol("isometry", 1e-9));
  return rep;
}

inline Report chern(const RunConfig& cfg) {
  Report rep{"chern", {}};
  rep.add("zeta-normalization", "the invariant two-form integrates to one over the sphere",
          std::abs(zeta_sphere_integral() - 1.0), cfg.tol("zeta", 1e-6));

  SL2CSampler rng(cfg.seed + 10, 0.7);
  const SL2CElement bz = exp_algebra(0.7 * generators().K3);
  double invariance = 0;
  for (int t = 0; t < 200; ++t) {
    const Eigen::Vector3d p = (0.3 + 2.0 * rng.uniform()) * rng.direction();
    const Eigen::Vector3d u = rng.direction(), v = rng.direction();
    invariance = std::max(invariance, std::abs(zeta_pullback(rng.rotation(), p, u, v) -
                                               zeta_eval(p, u, v)));
    invariance = std::max(invariance,
                          std::abs(zeta_pullback(bz, p, u, v) - zeta_eval(p, u, v)));
  }
  rep.add("zeta-invariance", "the two-form is invariant under sampled Lorentz pullbacks",
          invariance, cfg.tol("zeta_invariance", 1e-10));

  rep.add("curvature-generators", "boost-boost curvature is the rotation generator",
          std::abs(curvature_eval(generators().K1, generators().K2) - 1.0),
          cfg.tol("curvature", 1e-14));

  for (int ts : {-2, -1, 0, 1, 2, 4}) {
    const Helicity s(ts);
    const ChernResult r = chern_number(s, 2);
    rep.add("chern-" + std::to_string(ts), "the first Chern number equals -2s",
            std::abs(r.value - (-2.0 * s.value())), cfg.tol("chern", 1e-3));
  }

  const double base = chern_number(Helicity(2), 2, 0.2).value;
  const double small_cap = chern_number(Helicity(2), 2, 0.05).value;
  const double large_cap = chern_number(Helicity(2), 2, 0.5).value;
  rep.add("cap-independence", "the integral is independent of the chart seam",
          std::max(std::abs(base - small_cap), std::abs(base - large_cap)),
          cfg.tol("cap_independence", 2e-3));
  return rep;
}

inline Report parity(const RunConfig& cfg) {
  Report rep{"parity", {}};
  SL2CSampler rng(cfg.seed + 11, 1.0);
  const int n = cfg.sweep_samples;

  LorentzMatrix inversion = LorentzMatrix::Identity();
  inversion(1, 1) = inversion(2, 2) = inversion(3, 3) = -1.0;
  rep.add("parity-cover", "the block swap covers the spatial inversion",
          (kappa_tilde({SL2CElement::Identity(), true}) - inversion).cwiseAbs().maxCoeff(),
          cfg.tol("parity_cover", 1e-12));

  double extends = 0;
  for (int t = 0; t < 100; ++t) {
    const SL2CElement lam = rng.sample();
    extends = std::max(extends,
                       (kappa_tilde({lam, false}) - kappa(lam)).cwiseAbs().maxCoeff());
  }
  rep.add("cover-extension", "the extended cover restricts to the double cover", extends,
          cfg.tol("double_cover", 1e-10));

  double anti = 0;
  const double eta_diag[4] = {1, -1, -1, -1};
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      const Eigen::Matrix4cd lhs =
          dirac_gamma(mu) * dirac_gamma(nu) + dirac_gamma(nu) * dirac_gamma(mu);
      const Eigen::Matrix4cd expect =
          (mu == nu ? 2.0 * eta_diag[mu] : 0.0) * Eigen::Matrix4cd::Identity();
      anti = std::max(anti, (lhs - expect).cwiseAbs().maxCoeff());
    }
  rep.add("gamma-anticommutation", "the chiral blocks satisfy the Clifford relations", anti,
          cfg.tol("gamma", 1e-12));

  double invol = 0, flip = 0;
  for (int t = 0; t < n; ++t) {
    const FourVector a = four(rng.uniform() - 0.5, rng.uniform() - 0.5, rng.uniform() - 0.5,
                              rng.uniform() - 0.5);
    const SL2CElement lam = rng.sample();
    const auto [a1, l1] = delta(a, lam);
    const auto [a2, l2] = delta(a1, l1);
    invol = std::max(invol, std::max((a2 - a).cwiseAbs().maxCoeff(),
                                     (l2 - lam).cwiseAbs().maxCoeff()));
    for (int ts : {1, 2, 4})
      flip = std::max(flip, helicity_flip_check(Helicity(ts), random_little(rng)));
  }
  rep.add("delta-involution", "the parity twist squares to the identity", invol,
          cfg.tol("delta", 1e-12));
  rep.add("helicity-flip", "conjugation by the half-turn negates the helicity", flip,
          cfg.tol("flip", 1e-12));

  const ExtendedPoincareElement parity_el{FourVector::Zero(),
                                          {SL2CElement::Identity(), true}};
  double mixed = 0;
  const Helicity s(2);
  for (int t = 0; t < 200; ++t) {
    const ExtendedPoincareElement ga{four(rng.uniform() - 0.5, rng.uniform() - 0.5,
                                          rng.uniform() - 0.5, rng.uniform() - 0.5),
                                     {rng.sample(), false}};
    const ExtendedPoincareElement gb{four(rng.uniform() - 0.5, rng.uniform() - 0.5,
                                          rng.uniform() - 0.5, rng.uniform() - 0.5),
                                     {rng.sample(), false}};
    const DoubledFiberPoint x = DoubledFiberPoint::at(
        sample_point(rng, -0.99), Eigen::Vector2cd(rng.disc(), rng.disc()),
        Eigen::Vector2cd(rng.disc(), rng.disc()));
    const DoubledFiberPoint stepwise = doubled_fiber_action(
        s, ga, doubled_fiber_action(s, parity_el, doubled_fiber_action(s, gb, x)));
    const DoubledFiberPoint direct = doubled_fiber_action(s, ga * (parity_el * gb), x);
    mixed = std::max(mixed, (stepwise.v_plus - direct.v_plus).cwiseAbs().maxCoeff());
    mixed = std::max(mixed, (stepwise.v_minus - direct.v_minus).cwiseAbs().maxCoeff());
  }
  rep.add("doubled-mixed-product", "parity-interleaved products act consistently", mixed,
          cfg.tol("doubled_action", 1e-9));
  return rep;
}

inline std::vector<std::string> suite_names() {
  return {"core",   "little-group", "boosting", "perception", "photon",
          "graviton", "spin",        "chern",    "parity"};
}

inline Report run_suite(const std::string& name, const RunConfig& cfg) {
  if (name == "core") return core(cfg);
  if (name == "little-group") return little_group(cfg);
  if (name == "boosting") return boosting(cfg);
  if (name == "perception") return perception(cfg);
  if (name == "photon") return photon(cfg);
  if (name == "graviton") return graviton(cfg);
  if (name == "spin") return spin(cfg);
  if (name == "chern") return chern(cfg);
  if (name == "parity") return parity(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace lightcone::suites
