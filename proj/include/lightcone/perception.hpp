// Generic perception-bundle machinery: a model bundles a finite-dimensional
// representation Phi of SL(2,C), an isometric embedding eps of the two
// helicity directions, and an orthonormal basis of the gauge subspace W.
// Per momentum p the potential fiber is F_p = Phi(L(p)) R with
// R = W (+) eps(C^2), the gauge fiber is D_p = Phi(L(p)) W, and the
// perception fiber is the quotient E_p = F_p / D_p.
//
// The representative group element for a fiber is always the standard boost
// L(p); well-definedness under other choices is property-tested per model.
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lightcone/boosting.hpp"

namespace lightcone {

struct ModelError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct PerceptionModel {
  std::string name;
  int dim_v = 0;
  Helicity s;
  std::function<Eigen::MatrixXcd(const SL2CElement&)> phi;
  Eigen::MatrixXcd epsilon;  // dim_v x 2, isometric embedding
  Eigen::MatrixXcd w_basis;  // dim_v x dim_w, orthonormal, orthogonal to epsilon

  int dim_w() const { return static_cast<int>(w_basis.cols()); }

  // Orthogonal projector of V onto eps(C^2); on R it projects along W.
  Eigen::MatrixXcd canonical_projector_at_base() const { return epsilon * epsilon.adjoint(); }
};

struct ValidationReport {
  double epsilon_isometry = 0.0;   // || eps^+ eps - I ||
  double w_orthonormality = 0.0;   // || [w|eps]^+ [w|eps] - I || off the eps block
  double w_invariance = 0.0;       // worst || (I - P_RW) Phi(B) w ||, P_RW projecting onto W
  double mod_w = 0.0;              // worst || Phi(B) eps v - eps eta~_s(B) v  modulo W ||
  double phi_homomorphism = 0.0;   // worst || Phi(AB) - Phi(A) Phi(B) || (relative)

  double worst() const {
    return std::max({epsilon_isometry, w_orthonormality, w_invariance, mod_w,
                     phi_homomorphism});
  }
  bool passed(double tol = 1e-10) const { return worst() <= tol; }
};

// Checks the model hypotheses on sampled little-group elements and random
// group elements: eps isometry, orthonormal frame, Phi(B) W <= W,
// Phi(B) eps(v) = eps(eta~_s(B) v) modulo W, and multiplicativity of Phi.
inline ValidationReport validate_model(const PerceptionModel& m, int samples = 1000,
                                       std::uint64_t seed = 71) {
  ValidationReport rep;
  const int dv = m.dim_v, dw = m.dim_w();

  rep.epsilon_isometry =
      (m.epsilon.adjoint() * m.epsilon - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();

  Eigen::MatrixXcd frame(dv, dw + 2);
  frame << m.w_basis, m.epsilon;
  rep.w_orthonormality =
      (frame.adjoint() * frame - Eigen::MatrixXcd::Identity(dw + 2, dw + 2))
          .cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd pw = m.w_basis * m.w_basis.adjoint();

  SL2CSampler rng(seed, 1.0);
  for (int t = 0; t < samples; ++t) {
    const LittleGroupElement B = random_little(rng);
    const Eigen::MatrixXcd phiB = m.phi(B.matrix());

    if (dw > 0) {
      const Eigen::MatrixXcd moved = phiB * m.w_basis;
      rep.w_invariance =
          std::max(rep.w_invariance, (moved - pw * moved).cwiseAbs().maxCoeff());
    }

    const Eigen::MatrixXcd target = m.epsilon * eta_tilde(m.s, B);
    const Eigen::MatrixXcd diff = phiB * m.epsilon - target;
    rep.mod_w = std::max(rep.mod_w, (diff - pw * diff).cwiseAbs().maxCoeff());
  }

  for (int t = 0; t < samples / 10 + 1; ++t) {
    const SL2CElement a = rng.sample(), b = rng.sample();
    const Eigen::MatrixXcd lhs = m.phi(SL2CElement(a * b));
    const Eigen::MatrixXcd rhs = m.phi(a) * m.phi(b);
    rep.phi_homomorphism = std::max(
        rep.phi_homomorphism,
        (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, rhs.cwiseAbs().maxCoeff()));
  }
  return rep;
}

inline void ensure_valid(const PerceptionModel& m, double tol = 1e-10) {
  const ValidationReport rep = validate_model(m, 200);
  if (rep.epsilon_isometry > tol)
    throw ModelError(m.name + ": embedding is not an isometry (residual " +
                     std::to_string(rep.epsilon_isometry) + ")");
  if (rep.w_orthonormality > tol)
    throw ModelError(m.name + ": gauge frame is not orthonormal to the embedding");
  if (rep.w_invariance > tol)
    throw ModelError(m.name + ": gauge subspace is not little-group invariant");
  if (rep.mod_w > tol)
    throw ModelError(m.name + ": embedding does not intertwine the helicity characters mod W");
  if (rep.phi_homomorphism > tol)
    throw ModelError(m.name + ": phi is not multiplicative");
}

struct FiberFrame {
  MomentumPoint p;
  Eigen::MatrixXcd f_basis;              // dim_v x (dim_w + 2), spans F_p
  Eigen::MatrixXcd d_basis;              // dim_v x dim_w, spans D_p
  Eigen::MatrixXcd canonical_projector;  // Phi(L(p)) P_eps Phi(L(p))^{-1}
};

inline FiberFrame fiber_at(const PerceptionModel& m, const MomentumPoint& p) {
  const Eigen::MatrixXcd phiL = m.phi(standard_boost(p));
  FiberFrame f;
  f.p = p;
  f.f_basis.resize(m.dim_v, m.dim_w() + 2);
  f.f_basis << phiL * m.w_basis, phiL * m.epsilon;
  f.d_basis = phiL * m.w_basis;
  f.canonical_projector =
      phiL * m.canonical_projector_at_base() * phiL.inverse();
  return f;
}

// Orthogonal projector onto the column span (via thin QR).
inline Eigen::MatrixXcd span_projector(const Eigen::MatrixXcd& basis) {
  if (basis.cols() == 0) return Eigen::MatrixXcd::Zero(basis.rows(), basis.rows());
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(basis);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(basis.rows(), basis.cols());
  return q * q.adjoint();
}

inline int numerical_rank(const Eigen::MatrixXcd& m, double rel_threshold = 1e-8) {
  if (m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > rel_threshold * sv[0]) ++r;
  return r;
}

inline double fiber_membership_defect(const FiberFrame& f, const Eigen::VectorXcd& z) {
  const Eigen::MatrixXcd pf = span_projector(f.f_basis);
  const double scale = std::max(1.0, z.cwiseAbs().maxCoeff());
  return (z - pf * z).cwiseAbs().maxCoeff() / scale;
}

inline void require_fiber_member(const FiberFrame& f, const Eigen::VectorXcd& z,
                                 double tol = 1e-10) {
  if (fiber_membership_defect(f, z) > tol)
    throw ModelError("vector is not in the potential fiber at this momentum");
}

// Representative of z + D_p on the canonical subspace Phi(L(p)) eps(C^2).
inline Eigen::VectorXcd canonical_rep(const PerceptionModel& m, const MomentumPoint& p,
                                      const Eigen::VectorXcd& z, double tol = 1e-10) {
  const FiberFrame f = fiber_at(m, p);
  require_fiber_member(f, z, tol);
  return f.canonical_projector * z;
}

// C^2 coordinates of the canonical representative: eps^+ Phi(L(p))^{-1} z.
inline Eigen::Vector2cd quotient_coordinates(const PerceptionModel& m, const MomentumPoint& p,
                                             const Eigen::VectorXcd& z) {
  const Eigen::MatrixXcd phiL = m.phi(standard_boost(p));
  return m.epsilon.adjoint() * phiL.inverse() * z;
}

// h_p(z + D_p, w + D_p): pull back by Phi(L(p))^{-1}, project onto eps(C^2)
// along W, take the standard inner product. Conjugate-linear in the first slot.
inline cd quotient_metric(const PerceptionModel& m, const MomentumPoint& p,
                          const Eigen::VectorXcd& z, const Eigen::VectorXcd& w) {
  const Eigen::MatrixXcd phiL_inv = m.phi(standard_boost(p)).inverse();
  const Eigen::Vector2cd zc = m.epsilon.adjoint() * (phiL_inv * z);
  const Eigen::Vector2cd wc = m.epsilon.adjoint() * (phiL_inv * w);
  return zc.dot(wc);  // Eigen dot conjugates the first argument
}

// theta(a, Lambda)(p, z) = (Lambda p, e^{-i<Lambda p, a>} Phi(Lambda) z).
inline std::pair<MomentumPoint, Eigen::VectorXcd> potential_action(
    const PerceptionModel& m, const FourVector& a, const SL2CElement& lam,
    const MomentumPoint& p, const Eigen::VectorXcd& z) {
  const MomentumPoint q = boost_point(lam, p);
  const double ph = -minkowski_inner(q.four_vector(), a);
  return {q, cd(std::cos(ph), std::sin(ph)) * (m.phi(lam) * z).eval()};
}

// Wave functions valued in the potential fibers, defined modulo gauge
// sections. Cached per-node boosts keep repeated fiber work cheap.
struct PerceptionWaveFunction {
  ShellGrid grid;
  std::vector<Eigen::VectorXcd> values;
};

class FiberCache {
 public:
  FiberCache(const PerceptionModel& m, const ShellGrid& grid) : model_(&m) {
    phi_l_.reserve(grid.size());
    phi_l_inv_.reserve(grid.size());
    for (size_t i = 0; i < grid.size(); ++i) {
      phi_l_.push_back(m.phi(standard_boost(grid.node(i))));
      phi_l_inv_.push_back(phi_l_.back().inverse());
    }
  }
  const Eigen::MatrixXcd& phi_l(size_t i) const { return phi_l_[i]; }
  const Eigen::MatrixXcd& phi_l_inv(size_t i) const { return phi_l_inv_[i]; }
  const PerceptionModel& model() const { return *model_; }

 private:
  const PerceptionModel* model_;
  std::vector<Eigen::MatrixXcd> phi_l_, phi_l_inv_;
};

// Discrete h-inner product of two sections on a common grid.
inline cd perception_inner(const PerceptionModel& m, const PerceptionWaveFunction& a,
                           const PerceptionWaveFunction& b) {
  if (a.values.size() != b.values.size())
    throw std::invalid_argument("sections live on different grids");
  std::vector<cd> dens(a.values.size());
  FiberCache cache(m, a.grid);
  for (size_t i = 0; i < a.values.size(); ++i) {
    const Eigen::Vector2cd za = m.epsilon.adjoint() * (cache.phi_l_inv(i) * a.values[i]);
    const Eigen::Vector2cd zb = m.epsilon.adjoint() * (cache.phi_l_inv(i) * b.values[i]);
    dens[i] = za.dot(zb);
  }
  return integrate(dens, a.grid);
}

inline double perception_norm_squared(const PerceptionModel& m,
                                      const PerceptionWaveFunction& psi) {
  return perception_inner(m, psi, psi).real();
}

// Node-wise potential action with momentum relabeling on the pushforward grid.
inline PerceptionWaveFunction apply_perception_rep(const PerceptionModel& m,
                                                   const FourVector& a, const SL2CElement& lam,
                                                   const PerceptionWaveFunction& psi) {
  PerceptionWaveFunction out;
  out.grid = psi.grid.pushforward(lam);
  out.values.resize(psi.values.size());
  const Eigen::MatrixXcd phi_lam = m.phi(lam);
  for (size_t i = 0; i < psi.values.size(); ++i) {
    const double ph = -minkowski_inner(out.grid.node(i).four_vector(), a);
    out.values[i] = cd(std::cos(ph), std::sin(ph)) * (phi_lam * psi.values[i]).eval();
  }
  return out;
}

// Section whose canonical coordinates are f(p) v for a scalar profile f.
inline PerceptionWaveFunction make_section(const PerceptionModel& m, const ShellGrid& grid,
                                           const std::function<cd(const MomentumPoint&)>& f,
                                           const Eigen::Vector2cd& v) {
  PerceptionWaveFunction psi;
  psi.grid = grid;
  psi.values.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    psi.values[i] = f(grid.node(i)) * (m.phi(standard_boost(grid.node(i))) * m.epsilon * v).eval();
  return psi;
}

// Worst |h_{A p0}(Phi(A) eps v, Phi(A) eps w) - v . w| over random samples.
inline double primitive_isometry_check(const PerceptionModel& m, int samples,
                                       std::uint64_t seed = 2024, double rapidity = 1.0) {
  SL2CSampler rng(seed, rapidity);
  double worst = 0.0;
  for (int t = 0; t < samples; ++t) {
    SL2CElement a = rng.sample();
    MomentumPoint p = boost_point(a, lift(Eigen::Vector3d(0, 0, 1)));
    if (p.p[2] / p.p0 < -0.999) continue;  // stay off the section's singular ray
    Eigen::Vector2cd v(cd(rng.uniform() - 0.5, rng.uniform() - 0.5),
                       cd(rng.uniform() - 0.5, rng.uniform() - 0.5));
    Eigen::Vector2cd w(cd(rng.uniform() - 0.5, rng.uniform() - 0.5),
                       cd(rng.uniform() - 0.5, rng.uniform() - 0.5));
    const Eigen::MatrixXcd phiA = m.phi(a);
    const Eigen::VectorXcd zv = phiA * m.epsilon * v;
    const Eigen::VectorXcd zw = phiA * m.epsilon * w;
    worst = std::max(worst, std::abs(quotient_metric(m, p, zv, zw) - v.dot(w)));
  }
  return worst;
}

}  // namespace lightcone
