// Arbitrary-spin models on the 2s-fold symmetric power of C^2, realized on
// the normalized monomial basis e_m = sqrt(C(2s,m)) |+>^{2s-m} |->^m,
// m = 0..2s (so two_s = 1 reproduces the defining representation verbatim).
// The embedding sends |+-> to the extremal monomials and the gauge frame is
// the middle monomials, which gives the (2s-1)-dimensional gauge freedom.
//
// Caveat, verified in the tests: the middle-monomial span is not invariant
// under the full little group (the raising part of an upper-triangular B
// leaks the |->-column expansion onto the top monomial with coefficient
// b^{2s}), so unlike the photon and graviton models this family does not
// satisfy the quotient-metric hypotheses away from pure rotations.
#pragma once

#include "lightcone/perception.hpp"

namespace lightcone {

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Matrix of Sym^{2s}(T) on the normalized monomial basis; index m carries
// 2s - m factors of |+>.
inline Eigen::MatrixXcd sym_power_matrix(int two_s, const SL2CElement& t) {
  if (two_s < 1) throw std::invalid_argument("two_s must be at least 1");
  const int n = two_s;
  const cd a = t(0, 0), b = t(0, 1), c = t(1, 0), d = t(1, 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  // column col: (a|+> + c|->)^{n-col} (b|+> + d|->)^{col} over monomials
  for (int col = 0; col <= n; ++col) {
    const int kp = n - col;  // plus-count of the source monomial
    for (int i = 0; i <= kp; ++i) {
      const cd first = std::pow(a, i) * std::pow(c, kp - i) * binomial(kp, i);
      for (int j = 0; j <= col; ++j) {
        const int row = n - (i + j);  // i + j pluses in the target
        const cd second = std::pow(b, j) * std::pow(d, col - j) * binomial(col, j);
        m(row, col) += first * second * std::sqrt(binomial(n, col) / binomial(n, row));
      }
    }
  }
  return m;
}

inline int gauge_dimension(int two_s) { return std::max(two_s - 1, 0); }

inline PerceptionModel build_spin_model(int two_s) {
  if (two_s < 1) throw std::invalid_argument("two_s must be at least 1");
  PerceptionModel m;
  m.name = "spin:" + std::to_string(two_s);
  m.dim_v = two_s + 1;
  m.s = Helicity(two_s);
  m.phi = [two_s](const SL2CElement& t) { return sym_power_matrix(two_s, t); };

  m.epsilon = Eigen::MatrixXcd::Zero(two_s + 1, 2);
  m.epsilon(0, 0) = 1.0;      // |+>^{2s}, the J3-hat = +s monomial
  m.epsilon(two_s, 1) = 1.0;  // |->^{2s}, the J3-hat = -s monomial

  m.w_basis = Eigen::MatrixXcd::Zero(two_s + 1, gauge_dimension(two_s));
  for (int k = 1; k <= two_s - 1; ++k) m.w_basis(k, k - 1) = 1.0;
  return m;
}

// J3-hat spectrum of Phi_s via central differences along e^{theta J3}:
// eigenvalue s - m at basis index m, running from +s down to -s.
inline Eigen::VectorXd j3_spectrum(int two_s, double step = 1e-5) {
  const Eigen::MatrixXcd plus = sym_power_matrix(two_s, exp_algebra(step * generators().J3));
  const Eigen::MatrixXcd minus = sym_power_matrix(two_s, exp_algebra(-step * generators().J3));
  const Eigen::MatrixXcd deriv = cd(0, 1) * (plus - minus) / (2.0 * step);
  Eigen::VectorXd diag(two_s + 1);
  for (int k = 0; k <= two_s; ++k) diag[k] = deriv(k, k).real();
  return diag;
}

}  // namespace lightcone
