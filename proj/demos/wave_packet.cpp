// Synthesize a photon wave packet and watch the discrete wave-equation
// residual shrink at second order as the stencil is refined.

#include <cstdio>

#include "lightcone/photon.hpp"

using namespace lightcone;

int main() {
  const PerceptionModel m = build_photon_model();
  const ShellGrid g = ShellGrid::build({8, 0.5, 4.0}, {32});
  const PerceptionWaveFunction psi = make_section(
      m, g,
      [](const MomentumPoint& p) {
        return cd(std::exp(-2.0 * (p.p0 - 1.5) * (p.p0 - 1.5)), 0);
      },
      {cd(1, 0), cd(0.4, 0.2)});

  std::printf("%8s %14s %14s\n", "h", "wave", "divergence");
  double prev_wave = 0;
  for (const double h : {0.32, 0.16, 0.08, 0.04}) {
    const VectorFieldResiduals r = pde_residuals(synthesize_potential(psi, 9, h));
    std::printf("%8.3f %14.6e %14.6e", h, r.wave, r.lorenz);
    if (prev_wave > 0) std::printf("   x%.2f", prev_wave / r.wave);
    std::printf("\n");
    prev_wave = r.wave;
  }
  return 0;
}
