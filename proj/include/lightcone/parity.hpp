// Parity machinery: the block embedding of SL(2,C) into GL(4,C), the parity
// element swapping the two spinor blocks, the extended double cover onto the
// two-component Lorentz group, the involutive automorphism delta, the
// helicity flip, and the doubled fiber action that carries the parity
// extension at the level of sample fiber data.
#pragma once

#include "lightcone/boosting.hpp"

namespace lightcone {

// diag(L, L^{+-1}) in GL(4,C).
inline Eigen::Matrix4cd phi_embed(const SL2CElement& lam, double tol = 1e-12) {
  require_unimodular(lam, tol);
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m.block<2, 2>(0, 0) = lam;
  m.block<2, 2>(2, 2) = dagger_inverse(lam);
  return m;
}

// The block swap; squares to the identity.
inline Eigen::Matrix4cd parity_block() {
  Eigen::Matrix4cd p = Eigen::Matrix4cd::Zero();
  p.block<2, 2>(0, 2) = Eigen::Matrix2cd::Identity();
  p.block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
  return p;
}

// gamma(x) = [[0, tilde x], [utilde x, 0]].
inline Eigen::Matrix4cd gamma_map(const FourVector& x) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  g.block<2, 2>(0, 2) = tilde(x);
  g.block<2, 2>(2, 0) = utilde(x);
  return g;
}

// gamma^mu = gamma(eta^{mu nu} e_nu), the chiral-block Dirac matrices.
inline Eigen::Matrix4cd dirac_gamma(int mu) {
  FourVector e = FourVector::Zero();
  e[mu] = mu == 0 ? 1.0 : -1.0;
  return gamma_map(e);
}

inline FourVector ungamma(const Eigen::Matrix4cd& g) {
  return untilde(g.block<2, 2>(0, 2));
}

// Element of the two-component cover: realized matrix is Phi(core), or the
// parity block times it when the flag is set.
struct ExtendedGroupElement {
  SL2CElement core = SL2CElement::Identity();
  bool parity_flag = false;

  Eigen::Matrix4cd matrix() const {
    const Eigen::Matrix4cd m = phi_embed(core);
    return parity_flag ? (parity_block() * m).eval() : m;
  }

  // block algebra: P Phi(L) P = Phi(L^{+-1})
  ExtendedGroupElement operator*(const ExtendedGroupElement& o) const {
    const SL2CElement twisted = o.parity_flag ? dagger_inverse(core) : core;
    return {SL2CElement(twisted * o.core),
            static_cast<bool>(parity_flag ^ o.parity_flag)};
  }
};

// Extended double cover onto O^up(1,3), read off by conjugating gamma on the
// four basis vectors.
inline LorentzMatrix kappa_tilde(const ExtendedGroupElement& g) {
  const Eigen::Matrix4cd m = g.matrix();
  const Eigen::Matrix4cd minv = m.inverse();
  LorentzMatrix out;
  for (int nu = 0; nu < 4; ++nu) {
    FourVector e = FourVector::Zero();
    e[nu] = 1.0;
    out.col(nu) = ungamma(m * gamma_map(e) * minv);
  }
  return out;
}

// delta(a, L) = (P a, L^{+-1}), the involutive automorphism induced by
// conjugation with the parity element.
inline std::pair<FourVector, SL2CElement> delta(const FourVector& a, const SL2CElement& lam) {
  return {parity_flip(a), dagger_inverse(lam)};
}

// |eta-bar_s(R B R^{-1}) - eta_{-s}(B)| with R the half-turn about y; also
// exposes kappa(R) p0 = P p0.
inline double helicity_flip_check(Helicity s, const LittleGroupElement& B) {
  static const SL2CElement R = exp_algebra(M_PI * generators().J2);
  const SL2CElement conj = R * B.matrix() * R.inverse();
  return std::abs(eta_bar(s, conj, 1e-9) - eta(Helicity(-s.two_s), B));
}

// Fiber data for the doubled representation: the two summands carry their
// own momentum, the first transforming by the group element itself and the
// second by its delta-twist.
struct DoubledFiberPoint {
  MomentumPoint p_plus, p_minus;
  Eigen::Vector2cd v_plus, v_minus;

  static DoubledFiberPoint at(const MomentumPoint& p, const Eigen::Vector2cd& vp,
                              const Eigen::Vector2cd& vm) {
    return {p, p, vp, vm};
  }
};

struct ExtendedPoincareElement {
  FourVector a = FourVector::Zero();
  ExtendedGroupElement h;

  ExtendedPoincareElement operator*(const ExtendedPoincareElement& o) const {
    return {a + (kappa_tilde(h) * o.a).eval(), h * o.h};
  }
};

// pi(a,L) (+) pi(delta(a,L)) on sample fiber data, with the block swap for
// parity elements. A parity element factors as (a, P Phi(core)) =
// (0, P)(P a, Phi(core)), so the diagonal part acts with the flipped
// translation before the swap.
inline DoubledFiberPoint doubled_fiber_action(Helicity s, const ExtendedPoincareElement& g,
                                              const DoubledFiberPoint& x) {
  const FourVector a_eff = g.h.parity_flag ? parity_flip(g.a) : g.a;
  DoubledFiberPoint y = x;
  {
    // first summand: the boosting-bundle action of (a_eff, core)
    const LittleGroupElement w = wigner(g.h.core, x.p_plus);
    const MomentumPoint q = boost_point(g.h.core, x.p_plus);
    const double ph = -minkowski_inner(q.four_vector(), a_eff);
    y.p_plus = q;
    y.v_plus = cd(std::cos(ph), std::sin(ph)) * (eta_tilde(s, w) * x.v_plus);
  }
  {
    // second summand: the action of delta(a_eff, core)
    const auto [da, dlam] = delta(a_eff, g.h.core);
    const LittleGroupElement w = wigner(dlam, x.p_minus);
    const MomentumPoint q = boost_point(dlam, x.p_minus);
    const double ph = -minkowski_inner(q.four_vector(), da);
    y.p_minus = q;
    y.v_minus = cd(std::cos(ph), std::sin(ph)) * (eta_tilde(s, w) * x.v_minus);
  }
  if (g.h.parity_flag) {
    std::swap(y.p_plus, y.p_minus);
    std::swap(y.v_plus, y.v_minus);
  }
  return y;
}

}  // namespace lightcone
