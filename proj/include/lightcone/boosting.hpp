// The standard boosting section L(p) = R(p^) B0(|p|), Wigner transformations
// and phases, the helicity representation U_{L,s} on sampled wave functions,
// and the reduced-density-matrix demonstrations used in the RQI literature.
//
// The section is Borel, not continuous: R(p^) is singular on the ray spanned
// by -z, which is a mu-null set. Phase continuity across calls is not
// promised.
#pragma once

#include <vector>

#include "lightcone/little_group.hpp"
#include "lightcone/mass_shell.hpp"

namespace lightcone {

struct SingularRayError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// SU(2) rotation taking z^ to p^:
//   R(p^) = (1/sqrt(2(1+p3))) [[1+p3, -(p1 - i p2)], [p1 + i p2, 1+p3]].
inline SL2CElement standard_rotation(const Eigen::Vector3d& phat) {
  const double one_plus = 1.0 + phat[2];
  if (one_plus < 0.5e-18)  // within angle ~1e-9 of the -z ray
    throw SingularRayError("standard rotation undefined on the -z ray");
  const double f = 1.0 / std::sqrt(2.0 * one_plus);
  SL2CElement r;
  r(0, 0) = f * one_plus;
  r(0, 1) = -f * cd(phat[0], -phat[1]);
  r(1, 0) = f * cd(phat[0], phat[1]);
  r(1, 1) = f * one_plus;
  return r;
}

// B0(r) = diag(sqrt r, 1/sqrt r), the z-boost taking p0 to (r,0,0,r).
inline SL2CElement z_boost(double r) {
  SL2CElement b = SL2CElement::Zero();
  b(0, 0) = std::sqrt(r);
  b(1, 1) = 1.0 / std::sqrt(r);
  return b;
}

// L(p) = R(p^) B0(|p|); maps p0 to p.
inline SL2CElement standard_boost(const MomentumPoint& p) {
  return standard_rotation(p.p / p.p0) * z_boost(p.p0);
}

// Wigner transformation W_L(a, p) = L(a p)^{-1} a L(p) in K.
inline LittleGroupElement wigner(const SL2CElement& a, const MomentumPoint& p,
                                 double membership_tol = 1e-10) {
  const MomentumPoint q = boost_point(a, p);
  const SL2CElement w = standard_boost(q).inverse() * a * standard_boost(p);
  return decompose_little(w, membership_tol);
}

// Wigner phase Theta with eta~_s(W) = diag(e^{i s Theta}, e^{-i s Theta});
// Theta = 2 arg z on the principal branch, so Theta in (-2 pi, 2 pi].
inline double wigner_phase(const SL2CElement& a, const MomentumPoint& p) {
  return 2.0 * std::arg(wigner(a, p).z);
}

struct BoostingWaveFunction {
  ShellGrid grid;
  std::vector<Eigen::Vector2cd> values;  // amplitudes on (|+>, |->)

  double norm_squared() const {
    std::vector<cd> dens(values.size());
    for (size_t i = 0; i < values.size(); ++i) dens[i] = values[i].squaredNorm();
    return integrate(dens, grid).real();
  }
};

// [U_{L,s}(a, A) psi](p) = e^{-i<p,a>} eta~_s(W(A, A^{-1}p)) psi(A^{-1}p),
// realized on the pushforward grid so the discrete norm is a relabeling.
inline BoostingWaveFunction apply_boosting_rep(const FourVector& a, const SL2CElement& lam,
                                               Helicity s, const BoostingWaveFunction& psi) {
  BoostingWaveFunction out;
  out.grid = psi.grid.pushforward(lam);
  out.values.resize(psi.values.size());
  for (size_t i = 0; i < psi.values.size(); ++i) {
    const LittleGroupElement w = wigner(lam, psi.grid.node(i));
    const double phase = -minkowski_inner(out.grid.node(i).four_vector(), a);
    out.values[i] = cd(std::cos(phase), std::sin(phase)) * (eta_tilde(s, w) * psi.values[i]);
  }
  return out;
}

// tau = (1/||psi||^2) Int psi(p) psi(p)^+ d mu(p); Hermitian, PSD, trace 1.
inline Eigen::Matrix2cd helicity_reduced_density(const BoostingWaveFunction& psi) {
  const double n2 = psi.norm_squared();
  if (n2 <= 0.0) throw std::invalid_argument("zero-norm wave function");
  Eigen::Matrix2cd tau = Eigen::Matrix2cd::Zero();
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      std::vector<cd> dens(psi.values.size());
      for (size_t i = 0; i < psi.values.size(); ++i)
        dens[i] = psi.values[i][r] * std::conj(psi.values[i][c]);
      tau(r, c) = integrate(dens, psi.grid);
    }
  return tau / n2;
}

// Two-particle amplitudes psi(p_i, q_j) in C^2 (x) C^2, sampled on grid x grid.
struct TwoParticleWaveFunction {
  ShellGrid grid;
  std::vector<Eigen::Vector4cd> values;  // row-major over (i, j); basis ++, +-, -+, --

  size_t index(size_t i, size_t j) const { return i * grid.size() + j; }

  double norm_squared() const {
    double s = 0.0;
    for (size_t i = 0; i < grid.size(); ++i)
      for (size_t j = 0; j < grid.size(); ++j)
        s += grid.weight(i) * grid.weight(j) * values[index(i, j)].squaredNorm();
    return s;
  }
};

// Partial trace over both momentum factors.
inline Eigen::Matrix4cd two_particle_reduced(const TwoParticleWaveFunction& psi) {
  const double n2 = psi.norm_squared();
  if (n2 <= 0.0) throw std::invalid_argument("zero-norm two-particle state");
  Eigen::Matrix4cd tau = Eigen::Matrix4cd::Zero();
  for (size_t i = 0; i < psi.grid.size(); ++i)
    for (size_t j = 0; j < psi.grid.size(); ++j) {
      const double w = psi.grid.weight(i) * psi.grid.weight(j);
      const auto& v = psi.values[psi.index(i, j)];
      tau += w * (v * v.adjoint());
    }
  return tau / n2;
}

// log2 of the trace norm of the partial transpose on the second factor.
inline double log_negativity(const Eigen::Matrix4cd& rho, double density_tol = 1e-10) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > density_tol)
    throw std::invalid_argument("density matrix must be Hermitian");
  if (std::abs(rho.trace() - cd(1.0, 0.0)) > density_tol)
    throw std::invalid_argument("density matrix must have trace 1");
  {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -density_tol)
      throw std::invalid_argument("density matrix must be positive semidefinite");
  }
  // Partial transpose swaps the second index pair: (ab)(cd) -> (ad)(cb).
  Eigen::Matrix4cd pt;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          pt(2 * a + d, 2 * c + b) = rho(2 * a + b, 2 * c + d);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(pt, Eigen::EigenvaluesOnly);
  double trace_norm = 0.0;
  for (int k = 0; k < 4; ++k) trace_norm += std::abs(es.eigenvalues()[k]);
  return std::max(0.0, std::log2(trace_norm));
}

}  // namespace lightcone
