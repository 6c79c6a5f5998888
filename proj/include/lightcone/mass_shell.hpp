// The forward light cone X0 = {p : <p,p> = 0, p^0 > 0}, its invariant measure
// d mu = d^3p / p^0, and quadrature grids for discrete L^2 inner products.
//
// Radial nodes are Gauss-Legendre on a window [r_min, r_max]; sphere nodes
// come from a Fibonacci spiral with exact-area weights 4 pi / N. The spiral
// never places a node exactly on the -z ray.
#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "lightcone/sl2c.hpp"

namespace lightcone {

struct ZeroMomentumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct MomentumPoint {
  Eigen::Vector3d p;  // spatial momentum, nonzero
  double p0 = 0.0;    // = |p|

  FourVector four_vector() const { return four(p0, p[0], p[1], p[2]); }
};

// p -> (|p|, p), the positive mass shell chart.
inline MomentumPoint lift(const Eigen::Vector3d& p) {
  const double r = p.norm();
  if (r <= 0.0) throw ZeroMomentumError("zero spatial momentum is off the shell");
  return {p, r};
}

inline MomentumPoint boost_point(const SL2CElement& a, const MomentumPoint& q) {
  const FourVector y = act(a, q.four_vector());
  // Re-derive p^0 = |p| so the on-shell invariant stays exact.
  return lift(Eigen::Vector3d(y[1], y[2], y[3]));
}

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (t * p0 - p1) / (t * t - 1.0);
      const double dt = p0 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * pp * pp);
  }
}

struct RadialSpec {
  int nodes = 24;
  double r_min = 0.5;
  double r_max = 4.0;
};

struct AngularSpec {
  int nodes = 96;
};

class ShellGrid {
 public:
  ShellGrid() = default;

  static ShellGrid build(const RadialSpec& rad, const AngularSpec& ang) {
    if (!(rad.r_min > 0.0) || !(rad.r_max > rad.r_min))
      throw std::invalid_argument("radial window requires 0 < r_min < r_max");
    if (rad.nodes < 1 || ang.nodes < 1)
      throw std::invalid_argument("node counts must be positive");

    std::vector<double> gx, gw;
    gauss_legendre(rad.nodes, gx, gw);

    // Fibonacci sphere: z strictly inside (-1,1), equal weights 4 pi / N.
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<Eigen::Vector3d> dirs(ang.nodes);
    for (int k = 0; k < ang.nodes; ++k) {
      const double z = 1.0 - (2.0 * k + 1.0) / ang.nodes;
      const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * k;
      dirs[k] = Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi), z);
    }
    const double wdir = 4.0 * M_PI / ang.nodes;

    ShellGrid g;
    g.nodes_.reserve(static_cast<size_t>(rad.nodes) * ang.nodes);
    g.weights_.reserve(g.nodes_.capacity());
    const double half = 0.5 * (rad.r_max - rad.r_min);
    const double mid = 0.5 * (rad.r_max + rad.r_min);
    for (int i = 0; i < rad.nodes; ++i) {
      const double r = mid + half * gx[i];
      const double wr = half * gw[i] * r;  // r^2 dr / p^0 = r dr
      for (int k = 0; k < ang.nodes; ++k) {
        g.nodes_.push_back(lift(r * dirs[k]));
        g.weights_.push_back(wr * wdir);
      }
    }
    return g;
  }

  size_t size() const { return nodes_.size(); }
  const MomentumPoint& node(size_t i) const { return nodes_[i]; }
  double weight(size_t i) const { return weights_[i]; }
  const std::vector<MomentumPoint>& nodes() const { return nodes_; }
  double total_weight() const {
    double s = 0.0;
    for (double w : weights_) s += w;
    return s;
  }

  // Nodes mapped by kappa(a), weights untouched (measure invariance).
  ShellGrid pushforward(const SL2CElement& a) const {
    ShellGrid g;
    g.weights_ = weights_;
    g.nodes_.reserve(nodes_.size());
    for (const auto& n : nodes_) g.nodes_.push_back(boost_point(a, n));
    return g;
  }

 private:
  std::vector<MomentumPoint> nodes_;
  std::vector<double> weights_;
};

namespace detail {
// Deterministic pairwise reduction, independent of evaluation parallelism.
inline cd pairwise_sum(const std::vector<cd>& v, size_t lo, size_t hi) {
  if (hi - lo <= 8) {
    cd s(0.0, 0.0);
    for (size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  const size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}
}  // namespace detail

// Sum of w_i f_i over the grid.
inline cd integrate(const std::vector<cd>& values, const ShellGrid& grid) {
  if (values.size() != grid.size())
    throw std::invalid_argument("value count does not match grid");
  std::vector<cd> terms(values.size());
  for (size_t i = 0; i < values.size(); ++i) terms[i] = grid.weight(i) * values[i];
  return terms.empty() ? cd(0, 0) : detail::pairwise_sum(terms, 0, terms.size());
}

inline cd integrate(const std::function<cd(const MomentumPoint&)>& f, const ShellGrid& grid) {
  std::vector<cd> values(grid.size());
  for (size_t i = 0; i < grid.size(); ++i) values[i] = f(grid.node(i));
  return integrate(values, grid);
}

}  // namespace lightcone
