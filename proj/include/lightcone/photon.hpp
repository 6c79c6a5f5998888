// Spin-1 specialization on Minkowski space: Phi = kappa acting on C^4,
// circular polarization embedding, the transversality fiber condition
// p_mu z^mu = 0, and the gauge line C p. Synthesized fields obey the wave
// equation and the Lorenz gauge condition; gauge-shifted sections differ by
// a four-gradient.
#pragma once

#include "lightcone/fields.hpp"

namespace lightcone {

inline Eigen::Vector4cd circular_polarization(int sign) {
  Eigen::Vector4cd e;
  e << cd(0, 0), cd(1, 0), cd(0, sign), cd(0, 0);
  return e / std::sqrt(2.0);
}

inline PerceptionModel build_photon_model() {
  PerceptionModel m;
  m.name = "photon";
  m.dim_v = 4;
  m.s = Helicity(2);  // s = 1
  m.phi = [](const SL2CElement& a) -> Eigen::MatrixXcd {
    return kappa(a).cast<cd>();
  };
  m.epsilon.resize(4, 2);
  m.epsilon.col(0) = circular_polarization(+1);
  m.epsilon.col(1) = circular_polarization(-1);
  m.w_basis.resize(4, 1);
  m.w_basis.col(0) = base_momentum().cast<cd>() / std::sqrt(2.0);
  return m;
}

// |p_mu z^mu| with the bilinear Minkowski pairing (no conjugation).
inline double transversality_check(const MomentumPoint& p, const Eigen::Vector4cd& z) {
  const FourVector q = p.four_vector();
  return std::abs(q[0] * z[0] - q[1] * z[1] - q[2] * z[2] - q[3] * z[3]);
}

// D_p = C p, the complexified momentum line.
inline Eigen::Vector4cd gauge_line(const MomentumPoint& p) {
  return p.four_vector().cast<cd>();
}

inline SpacetimeField synthesize_potential(const PerceptionWaveFunction& psi, int n, double h) {
  return synthesize_field(psi, n, h);
}

// psi'(p) = psi(p) + zeta(p) p, the momentum-space gauge shift.
inline PerceptionWaveFunction gauge_shift(const PerceptionWaveFunction& psi,
                                          const std::function<cd(const MomentumPoint&)>& zeta) {
  PerceptionWaveFunction out = psi;
  for (size_t i = 0; i < out.values.size(); ++i)
    out.values[i] += zeta(out.grid.node(i)) * gauge_line(out.grid.node(i));
  return out;
}

// Scalar synthesis used for the gauge function g (Fourier transform of f).
inline SpacetimeField synthesize_scalar(const ShellGrid& grid,
                                        const std::function<cd(const MomentumPoint&)>& f,
                                        int n, double h) {
  PerceptionWaveFunction psi;
  psi.grid = grid;
  psi.values.resize(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) {
    Eigen::VectorXcd v(1);
    v[0] = f(grid.node(i));
    psi.values[i] = v;
  }
  return synthesize_field(psi, n, h);
}

}  // namespace lightcone
