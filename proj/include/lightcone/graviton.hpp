// Spin-2 specialization on C^4 (x) C^4: Phi = kappa (x) kappa, the
// polarization embedding eps(|+->) = eps_+- (x) eps_+-, the three-dimensional
// gauge subspace spanned by p0 (x) p0 and the symmetrized p0 (x) eps_+-, and
// the symmetric / transverse / traceless fiber conditions.
//
// Tensors are flattened row-major: component 4 mu + nu holds M^{mu nu}.
#pragma once

#include "lightcone/photon.hpp"

namespace lightcone {

inline Eigen::VectorXcd tensor_flatten(const Eigen::Matrix4cd& m) {
  Eigen::VectorXcd v(16);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) v[4 * mu + nu] = m(mu, nu);
  return v;
}

inline Eigen::Matrix4cd tensor_unflatten(const Eigen::VectorXcd& v) {
  Eigen::Matrix4cd m;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) m(mu, nu) = v[4 * mu + nu];
  return m;
}

// (v (x) w)^{mu nu} = v^mu w^nu.
inline Eigen::VectorXcd tensor_product(const Eigen::Vector4cd& v, const Eigen::Vector4cd& w) {
  return tensor_flatten((v * w.transpose()).eval());
}

inline PerceptionModel build_graviton_model() {
  PerceptionModel m;
  m.name = "graviton";
  m.dim_v = 16;
  m.s = Helicity(4);  // s = 2
  m.phi = [](const SL2CElement& a) -> Eigen::MatrixXcd {
    const Eigen::Matrix4cd k = kappa(a).cast<cd>();
    Eigen::MatrixXcd kk(16, 16);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu)
        for (int al = 0; al < 4; ++al)
          for (int be = 0; be < 4; ++be)
            kk(4 * mu + nu, 4 * al + be) = k(mu, al) * k(nu, be);
    return kk;
  };

  const Eigen::Vector4cd p0 = base_momentum().cast<cd>();
  const Eigen::Vector4cd ep = circular_polarization(+1);
  const Eigen::Vector4cd em = circular_polarization(-1);

  m.epsilon.resize(16, 2);
  m.epsilon.col(0) = tensor_product(ep, ep);
  m.epsilon.col(1) = tensor_product(em, em);

  // The three listed gauge vectors are orthonormal with the 1/2 factors;
  // build asserts it rather than trusting the algebra.
  m.w_basis.resize(16, 3);
  m.w_basis.col(0) = 0.5 * tensor_product(p0, p0);
  m.w_basis.col(1) = 0.5 * (tensor_product(p0, ep) + tensor_product(ep, p0));
  m.w_basis.col(2) = 0.5 * (tensor_product(p0, em) + tensor_product(em, p0));
  for (int c = 0; c < 3; ++c) {
    const double n = m.w_basis.col(c).norm();
    if (std::abs(n - 1.0) > 1e-12)
      throw ModelError("graviton gauge frame normalization defect");
    m.w_basis.col(c) /= n;
  }
  return m;
}

struct TensorConditionResiduals {
  double symmetric = 0.0;
  double transverse = 0.0;
  double traceless = 0.0;
};

// Residuals of M^{mu nu} = M^{nu mu}, p_mu M^{mu nu} = 0, and M^mu_mu = 0
// (trace taken with eta).
inline TensorConditionResiduals tensor_conditions(const MomentumPoint& p,
                                                  const Eigen::Matrix4cd& m) {
  TensorConditionResiduals r;
  r.symmetric = (m - m.transpose()).cwiseAbs().maxCoeff();

  const FourVector q = p.four_vector();
  Eigen::Vector4cd lowered(q[0], -q[1], -q[2], -q[3]);
  for (int nu = 0; nu < 4; ++nu) {
    cd contraction(0, 0);
    for (int mu = 0; mu < 4; ++mu) contraction += lowered[mu] * m(mu, nu);
    r.transverse = std::max(r.transverse, std::abs(contraction));
  }

  r.traceless = std::abs(m(0, 0) - m(1, 1) - m(2, 2) - m(3, 3));
  return r;
}

// Basis {p (x) x_i + x_i (x) p} of D_p with x_i spanning the photon fiber.
inline Eigen::MatrixXcd gauge_subspace(const PerceptionModel& photon, const MomentumPoint& p) {
  const FiberFrame pf = fiber_at(photon, p);
  const Eigen::Vector4cd pc = p.four_vector().cast<cd>();
  Eigen::MatrixXcd basis(16, pf.f_basis.cols());
  for (int c = 0; c < pf.f_basis.cols(); ++c) {
    const Eigen::Vector4cd x = pf.f_basis.col(c);
    basis.col(c) = tensor_product(pc, x) + tensor_product(x, pc);
  }
  return basis;
}

inline SpacetimeField synthesize_perturbation(const PerceptionWaveFunction& psi, int n,
                                              double h) {
  return synthesize_field(psi, n, h);
}

// psi'(p) = psi(p) + p (x) x(p) + x(p) (x) p for a photon-fiber section x.
inline PerceptionWaveFunction tensor_gauge_shift(
    const PerceptionWaveFunction& psi,
    const std::function<Eigen::Vector4cd(const MomentumPoint&)>& x) {
  PerceptionWaveFunction out = psi;
  for (size_t i = 0; i < out.values.size(); ++i) {
    const Eigen::Vector4cd pc = out.grid.node(i).four_vector().cast<cd>();
    const Eigen::Vector4cd xi = x(out.grid.node(i));
    out.values[i] += tensor_product(pc, xi) + tensor_product(xi, pc);
  }
  return out;
}

}  // namespace lightcone
