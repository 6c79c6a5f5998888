// Minkowski four-vector algebra with signature (+,-,-,-) and the 2x2
// Hermitian-matrix encoding of four-vectors.
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace lightcone {

using cd = std::complex<double>;
using FourVector = Eigen::Vector4d;
using LorentzMatrix = Eigen::Matrix4d;

inline FourVector four(double x0, double x1, double x2, double x3) {
  return FourVector(x0, x1, x2, x3);
}

// <x,y> = x^0 y^0 - x^1 y^1 - x^2 y^2 - x^3 y^3
inline double minkowski_inner(const FourVector& x, const FourVector& y) {
  return x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3];
}

inline LorentzMatrix minkowski_metric() {
  LorentzMatrix eta = LorentzMatrix::Zero();
  eta(0, 0) = 1.0;
  eta(1, 1) = eta(2, 2) = eta(3, 3) = -1.0;
  return eta;
}

// Spatial inversion diag(1,-1,-1,-1) applied to a four-vector.
inline FourVector parity_flip(const FourVector& x) {
  return four(x[0], -x[1], -x[2], -x[3]);
}

// x~ = [[x0+x3, x1-ix2],[x1+ix2, x0-x3]]; Hermitian, det = <x,x>.
inline Eigen::Matrix2cd tilde(const FourVector& x) {
  Eigen::Matrix2cd m;
  m(0, 0) = cd(x[0] + x[3], 0.0);
  m(0, 1) = cd(x[1], -x[2]);
  m(1, 0) = cd(x[1], x[2]);
  m(1, 1) = cd(x[0] - x[3], 0.0);
  return m;
}

// Lowered-index variant: utilde(x) = tilde(P x).
inline Eigen::Matrix2cd utilde(const FourVector& x) {
  return tilde(parity_flip(x));
}

// Recover x from its tilde encoding.
inline FourVector untilde(const Eigen::Matrix2cd& m) {
  FourVector x;
  x[0] = 0.5 * (m(0, 0).real() + m(1, 1).real());
  x[3] = 0.5 * (m(0, 0).real() - m(1, 1).real());
  x[1] = m(1, 0).real();
  x[2] = m(1, 0).imag();
  return x;
}

// Residual of eta-preservation: || M^T eta M - eta ||_inf.
inline double lorentz_defect(const LorentzMatrix& m) {
  const LorentzMatrix eta = minkowski_metric();
  return (m.transpose() * eta * m - eta).cwiseAbs().maxCoeff();
}

// Member of SO^up(1,3): preserves eta, det = +1, (0,0) entry >= 1.
inline bool is_restricted_lorentz(const LorentzMatrix& m, double tol = 1e-10) {
  return lorentz_defect(m) <= tol && std::abs(m.determinant() - 1.0) <= tol &&
         m(0, 0) >= 1.0 - tol;
}

// Reference null momentum p0 = (1,0,0,1).
inline FourVector base_momentum() { return four(1.0, 0.0, 0.0, 1.0); }

}  // namespace lightcone
