// Uniform spacetime grids, direct Fourier synthesis of momentum sections into
// classical fields, and central-difference residuals of the emergent PDEs.
#pragma once

#include <future>
#include <thread>

#include "lightcone/perception.hpp"

namespace lightcone {

// Complex multi-component field sampled on a uniform 4d grid.
struct SpacetimeField {
  int n = 0;          // points per axis
  double h = 0.0;     // spacing
  FourVector origin;  // coordinates of grid index (0,0,0,0)
  int ncomp = 0;
  std::vector<cd> data;  // index: ((comp * n + it) * n + ix) * n * n + iy * n + iz

  static SpacetimeField zeros(int n, double h, const FourVector& origin, int ncomp) {
    SpacetimeField f;
    f.n = n;
    f.h = h;
    f.origin = origin;
    f.ncomp = ncomp;
    f.data.assign(static_cast<size_t>(ncomp) * n * n * n * n, cd(0, 0));
    return f;
  }

  static SpacetimeField centered(int n, double h, int ncomp) {
    const double half = 0.5 * h * (n - 1);
    return zeros(n, h, four(-half, -half, -half, -half), ncomp);
  }

  size_t index(int c, int it, int ix, int iy, int iz) const {
    return (((static_cast<size_t>(c) * n + it) * n + ix) * n + iy) * n + iz;
  }
  cd& at(int c, int it, int ix, int iy, int iz) { return data[index(c, it, ix, iy, iz)]; }
  cd at(int c, int it, int ix, int iy, int iz) const { return data[index(c, it, ix, iy, iz)]; }

  FourVector point(int it, int ix, int iy, int iz) const {
    return four(origin[0] + h * it, origin[1] + h * ix, origin[2] + h * iy,
                origin[3] + h * iz);
  }

  double max_abs() const {
    double m = 0.0;
    for (const cd& v : data) m = std::max(m, std::abs(v));
    return m;
  }
};

// field(x) = Int e^{-i p0 t + i p.x} sqrt(p0) psi(p) d mu(p) / (2 pi)^{3/2},
// evaluated by direct quadrature against the section's grid. Phases factorize
// along the axes, so per-node 1d phase tables cover the whole grid.
inline SpacetimeField synthesize_field(const PerceptionWaveFunction& psi, int n, double h) {
  const int ncomp = psi.values.empty() ? 0 : static_cast<int>(psi.values[0].size());
  SpacetimeField f = SpacetimeField::centered(n, h, ncomp);
  const size_t nodes = psi.grid.size();
  const double norm = 1.0 / std::pow(2.0 * M_PI, 1.5);

  std::vector<cd> coeff(nodes);
  for (size_t k = 0; k < nodes; ++k)
    coeff[k] = psi.grid.weight(k) * std::sqrt(psi.grid.node(k).p0) * norm;

  // phase tables: axis 0 carries e^{-i p0 t}, axes 1..3 carry e^{+i p_j x_j}
  std::vector<std::vector<cd>> table(4, std::vector<cd>(nodes * n));
  for (size_t k = 0; k < nodes; ++k) {
    const FourVector p = psi.grid.node(k).four_vector();
    for (int i = 0; i < n; ++i) {
      const FourVector x0 = f.point(i, i, i, i);
      table[0][k * n + i] = std::exp(cd(0, -p[0] * x0[0]));
      for (int ax = 1; ax < 4; ++ax)
        table[ax][k * n + i] = std::exp(cd(0, p[ax] * x0[ax]));
    }
  }

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  std::atomic<int> next_slice{0};
  auto work = [&]() {
    for (int it = next_slice.fetch_add(1); it < n; it = next_slice.fetch_add(1)) {
      for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy)
          for (int iz = 0; iz < n; ++iz) {
            for (size_t k = 0; k < nodes; ++k) {
              const cd phase = coeff[k] * table[0][k * n + it] * table[1][k * n + ix] *
                               table[2][k * n + iy] * table[3][k * n + iz];
              const auto& v = psi.values[k];
              for (int c = 0; c < ncomp; ++c)
                f.at(c, it, ix, iy, iz) += phase * v[c];
            }
          }
    }
  };
  for (unsigned t = 0; t + 1 < workers; ++t) jobs.push_back(std::async(std::launch::async, work));
  work();
  for (auto& j : jobs) j.get();
  return f;
}

// Second-order central stencils on interior points.
namespace detail {
struct Stencil {
  const SpacetimeField& f;
  int c, it, ix, iy, iz;
  cd shift(int axis, int d) const {
    int i[4] = {it, ix, iy, iz};
    i[axis] += d;
    return f.at(c, i[0], i[1], i[2], i[3]);
  }
  cd d1(int axis) const { return (shift(axis, 1) - shift(axis, -1)) / (2.0 * f.h); }
  cd d2(int axis) const {
    return (shift(axis, 1) - 2.0 * f.at(c, it, ix, iy, iz) + shift(axis, -1)) / (f.h * f.h);
  }
};
}  // namespace detail

struct VectorFieldResiduals {
  double wave = 0.0;    // max |d'Alembertian| / max |A|
  double lorenz = 0.0;  // max |div A| / max |A|
};

// Wave and divergence residuals of a four-vector field (ncomp = 4).
inline VectorFieldResiduals pde_residuals(const SpacetimeField& a) {
  if (a.ncomp != 4) throw std::invalid_argument("expected a four-component field");
  if (a.n < 3) throw std::invalid_argument("grid too small for central differences");
  const double scale = a.max_abs();
  VectorFieldResiduals r;
  if (scale == 0.0) return r;
  for (int it = 1; it + 1 < a.n; ++it)
    for (int ix = 1; ix + 1 < a.n; ++ix)
      for (int iy = 1; iy + 1 < a.n; ++iy)
        for (int iz = 1; iz + 1 < a.n; ++iz) {
          cd div(0, 0);
          for (int c = 0; c < 4; ++c) {
            detail::Stencil st{a, c, it, ix, iy, iz};
            const cd box = st.d2(0) - st.d2(1) - st.d2(2) - st.d2(3);
            r.wave = std::max(r.wave, std::abs(box));
            div += st.d1(c);  // d_mu A^mu contracts lower derivative, upper index
          }
          r.lorenz = std::max(r.lorenz, std::abs(div));
        }
  r.wave /= scale;
  r.lorenz /= scale;
  return r;
}

struct TensorFieldResiduals {
  double wave = 0.0;
  double divergence = 0.0;
  double trace = 0.0;     // eta_{mu nu} h^{mu nu}, algebraic
  double symmetry = 0.0;  // antisymmetric part, algebraic
};

// Residuals for a 2-tensor field (ncomp = 16, row-major (mu, nu)).
inline TensorFieldResiduals tt_residuals(const SpacetimeField& hf) {
  if (hf.ncomp != 16) throw std::invalid_argument("expected a 16-component field");
  if (hf.n < 3) throw std::invalid_argument("grid too small for central differences");
  const double scale = hf.max_abs();
  TensorFieldResiduals r;
  if (scale == 0.0) return r;
  const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  for (int it = 1; it + 1 < hf.n; ++it)
    for (int ix = 1; ix + 1 < hf.n; ++ix)
      for (int iy = 1; iy + 1 < hf.n; ++iy)
        for (int iz = 1; iz + 1 < hf.n; ++iz) {
          cd trace(0, 0);
          for (int mu = 0; mu < 4; ++mu) {
            trace += eta[mu] * hf.at(4 * mu + mu, it, ix, iy, iz);
            for (int nu = 0; nu < 4; ++nu) {
              detail::Stencil st{hf, 4 * mu + nu, it, ix, iy, iz};
              const cd box = st.d2(0) - st.d2(1) - st.d2(2) - st.d2(3);
              r.wave = std::max(r.wave, std::abs(box));
              r.symmetry = std::max(
                  r.symmetry, std::abs(hf.at(4 * mu + nu, it, ix, iy, iz) -
                                       hf.at(4 * nu + mu, it, ix, iy, iz)));
            }
          }
          r.trace = std::max(r.trace, std::abs(trace));
          for (int nu = 0; nu < 4; ++nu) {
            cd div(0, 0);
            for (int mu = 0; mu < 4; ++mu) {
              detail::Stencil st{hf, 4 * mu + nu, it, ix, iy, iz};
              div += st.d1(mu);
            }
            r.divergence = std::max(r.divergence, std::abs(div));
          }
        }
  r.wave /= scale;
  r.divergence /= scale;
  r.trace /= scale;
  r.symmetry /= scale;
  return r;
}

}  // namespace lightcone
