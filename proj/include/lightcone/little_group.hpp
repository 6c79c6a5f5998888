// The stabilizer K of the reference null momentum p0 = (1,0,0,1): upper
// triangular [[z,b],[0,conj z]] with |z| = 1, its double cover onto
// E(2) = C x| U(1), and the helicity characters eta_s(B) = z^{2s}.
#pragma once

#include <stdexcept>
#include <string>

#include "lightcone/sl2c.hpp"

namespace lightcone {

struct MembershipError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Helicity label s with 2s integral.
struct Helicity {
  int two_s = 0;
  constexpr Helicity() = default;
  constexpr explicit Helicity(int ts) : two_s(ts) {}
  static Helicity from_double(double s) {
    const double ts = 2.0 * s;
    const int r = static_cast<int>(std::lround(ts));
    if (std::abs(ts - r) > 1e-9)
      throw std::invalid_argument("helicity must be a half integer");
    return Helicity(r);
  }
  double value() const { return 0.5 * two_s; }
};

struct LittleGroupElement {
  cd z{1.0, 0.0};  // unit modulus
  cd b{0.0, 0.0};

  SL2CElement matrix() const {
    SL2CElement m;
    m << z, b, cd(0, 0), std::conj(z);
    return m;
  }
  LittleGroupElement operator*(const LittleGroupElement& o) const {
    // [[z,b],[0,z~]][[z',b'],[0,z~']] = [[zz', zb'+b z~'],[0, (zz')~]]
    return {z * o.z, z * o.b + b * std::conj(o.z)};
  }
};

// Split B in K into (z,b). Rejects matrices outside K.
inline LittleGroupElement decompose_little(const SL2CElement& m, double tol = 1e-10) {
  const double lower = std::abs(m(1, 0));
  if (lower > tol)
    throw MembershipError("not in the little group: lower-left entry magnitude " +
                          std::to_string(lower));
  const double zmod = std::abs(m(0, 0));
  if (std::abs(zmod - 1.0) > tol)
    throw MembershipError("not in the little group: |z| - 1 = " +
                          std::to_string(zmod - 1.0));
  cd z = m(0, 0);
  z /= std::abs(z);  // renormalize before any powering
  return {z, m(0, 1)};
}

// Double cover K -> E(2) = C x| U(1), B |-> (z b, z^2).
inline std::pair<cd, cd> e2_cover(const LittleGroupElement& B) {
  return {B.z * B.b, B.z * B.z};
}

inline cd unit_power(cd z, int n) {
  z /= std::abs(z);
  cd r(1.0, 0.0);
  cd base = n >= 0 ? z : std::conj(z);
  for (int k = std::abs(n); k > 0; k >>= 1) {
    if (k & 1) r *= base;
    base *= base;
  }
  return r;
}

// eta_s(B) = z^{2s}; a character of K, constant in b.
inline cd eta(Helicity s, const LittleGroupElement& B) {
  return unit_power(B.z, s.two_s);
}

// eta~_s = diag(eta_s, eta_{-s}).
inline Eigen::Matrix2cd eta_tilde(Helicity s, const LittleGroupElement& B) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = eta(s, B);
  m(1, 1) = eta(Helicity(-s.two_s), B);
  return m;
}

// The opposite little group K~ stabilizing P p0 = (1,0,0,-1): lower
// triangular [[z,0],[b,conj z]].
inline LittleGroupElement decompose_little_bar(const SL2CElement& m, double tol = 1e-10) {
  const double upper = std::abs(m(0, 1));
  if (upper > tol)
    throw MembershipError("not in the opposite little group: upper-right entry magnitude " +
                          std::to_string(upper));
  const double zmod = std::abs(m(0, 0));
  if (std::abs(zmod - 1.0) > tol)
    throw MembershipError("not in the opposite little group: |z| - 1 = " +
                          std::to_string(zmod - 1.0));
  cd z = m(0, 0);
  z /= std::abs(z);
  return {z, m(1, 0)};
}

// eta~_s on K~: [[z,0],[b,conj z]] |-> z^{2s}.
inline cd eta_bar(Helicity s, const SL2CElement& lower_triangular, double tol = 1e-10) {
  return unit_power(decompose_little_bar(lower_triangular, tol).z, s.two_s);
}

// Eigenvalue of J^3-hat = i (eta_s)_* (J^3); equals s.
inline double j3_eigenvalue(Helicity s) { return s.value(); }

// Deterministic little-group sampler: z uniform on the circle, b on a disc.
inline LittleGroupElement random_little(SL2CSampler& rng, double b_radius = 2.0) {
  return {rng.unit_complex(), rng.disc(b_radius)};
}

}  // namespace lightcone
