// SL(2,C), its generators, the closed-form exponential on sl(2,C), and the
// double covering map onto the restricted Lorentz group.
//
// Generator convention: J^j = -(i/2) sigma_j, K^j = (1/2) sigma_j, so that
// exp(theta J^3) = diag(e^{-i theta/2}, e^{i theta/2}) and exp(u K^3) is the
// z-boost diag(e^{u/2}, e^{-u/2}).
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "lightcone/minkowski.hpp"

namespace lightcone {

using SL2CElement = Eigen::Matrix2cd;

struct NonUnimodularError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline double unimodular_defect(const SL2CElement& a) {
  return std::abs(a.determinant() - cd(1.0, 0.0));
}

inline void require_unimodular(const SL2CElement& a, double tol = 1e-12) {
  if (unimodular_defect(a) > tol)
    throw NonUnimodularError("SL(2,C) element has det != 1");
}

inline Eigen::Matrix2cd pauli(int j) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  switch (j) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = cd(0, -1); s(1, 0) = cd(0, 1); break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli index must be 1..3");
  }
  return s;
}

struct GeneratorSet {
  Eigen::Matrix2cd J1, J2, J3, K1, K2, K3;
  GeneratorSet() {
    const cd mi2(0.0, -0.5);
    J1 = mi2 * pauli(1); J2 = mi2 * pauli(2); J3 = mi2 * pauli(3);
    K1 = 0.5 * pauli(1); K2 = 0.5 * pauli(2); K3 = 0.5 * pauli(3);
  }
  Eigen::Matrix2cd rotation(const Eigen::Vector3d& n) const {
    return n[0] * J1 + n[1] * J2 + n[2] * J3;
  }
  Eigen::Matrix2cd boost(const Eigen::Vector3d& n) const {
    return n[0] * K1 + n[1] * K2 + n[2] * K3;
  }
};

inline const GeneratorSet& generators() {
  static const GeneratorSet g;
  return g;
}

// exp of a traceless 2x2 matrix. Cayley-Hamilton gives X^2 = -det(X) I, so
// exp X = cosh(mu) I + (sinh(mu)/mu) X with mu^2 = -det X; the series branch
// handles the nilpotent cone where mu ~ 0.
inline SL2CElement exp_algebra(const Eigen::Matrix2cd& x, double trace_tol = 1e-12) {
  if (std::abs(x.trace()) > trace_tol)
    throw std::invalid_argument("exp_algebra requires a traceless matrix");
  const cd mu2 = -x.determinant();  // tr(X^2)/2
  cd ch, shm;                       // cosh(mu), sinh(mu)/mu
  if (std::abs(mu2) < 0.5e-8) {
    ch = 1.0 + mu2 / 2.0 + mu2 * mu2 / 24.0;
    shm = 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
  } else {
    const cd mu = std::sqrt(mu2);
    ch = std::cosh(mu);
    shm = std::sinh(mu) / mu;
  }
  return ch * Eigen::Matrix2cd::Identity() + shm * x;
}

// kappa : SL(2,C) -> SO^up(1,3), defined by tilde(kappa(L)x) = L tilde(x) L^+.
// Columns are read off by conjugating the four basis vectors.
inline LorentzMatrix kappa(const SL2CElement& a, double tol = 1e-12) {
  require_unimodular(a, tol);
  LorentzMatrix m;
  for (int nu = 0; nu < 4; ++nu) {
    FourVector e = FourVector::Zero();
    e[nu] = 1.0;
    m.col(nu) = untilde(a * tilde(e) * a.adjoint());
  }
  return m;
}

inline FourVector act(const SL2CElement& a, const FourVector& x) {
  return untilde(a * tilde(x) * a.adjoint());
}

// (A^+)^{-1} for unimodular A in closed form: [[a,b],[c,d]] has adjoint
// inverse [[conj d, -conj c], [-conj b, conj a]]. Involutive to the bit.
inline SL2CElement dagger_inverse(const SL2CElement& a) {
  SL2CElement m;
  m << std::conj(a(1, 1)), -std::conj(a(1, 0)), -std::conj(a(0, 1)), std::conj(a(0, 0));
  return m;
}

// Deterministic sampler of rotation * boost products with boost rapidity
// bounded by `rapidity_bound`.
class SL2CSampler {
 public:
  explicit SL2CSampler(std::uint64_t seed, double rapidity_bound = 1.0)
      : rng_(seed), bound_(rapidity_bound) {
    if (rapidity_bound < 0) throw std::invalid_argument("rapidity_bound < 0");
  }

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  Eigen::Vector3d direction() {
    // Marsaglia rejection on the unit ball keeps the stream deterministic.
    while (true) {
      Eigen::Vector3d v(2 * uniform() - 1, 2 * uniform() - 1, 2 * uniform() - 1);
      const double n = v.norm();
      if (n > 1e-6 && n <= 1.0) return v / n;
    }
  }

  SL2CElement rotation() {
    const double angle = 2.0 * M_PI * uniform();
    return exp_algebra(angle * generators().rotation(direction()));
  }

  SL2CElement sample() {
    const double u = bound_ * uniform();
    return rotation() * exp_algebra(u * generators().boost(direction()));
  }

  cd unit_complex() {
    const double a = 2.0 * M_PI * uniform();
    return cd(std::cos(a), std::sin(a));
  }

  cd disc(double radius = 1.0) {
    while (true) {
      const cd z(2 * uniform() - 1, 2 * uniform() - 1);
      if (std::abs(z) <= 1.0) return radius * z;
    }
  }

 private:
  std::mt19937_64 rng_;
  double bound_;
};

inline SL2CElement random_sl2c(std::uint64_t seed, double rapidity_bound) {
  return SL2CSampler(seed, rapidity_bound).sample();
}

}  // namespace lightcone
