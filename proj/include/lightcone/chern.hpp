// First-Chern-number machinery for the helicity line bundles over the
// punctured light cone. The connection comes from projecting the
// Maurer-Cartan form onto the rotation generator J3; its curvature evaluated
// on left-translated tangents X, Y is 2 Im(X12 Y21 - X21 Y12) J3, and pushing
// through the helicity character and scaling by i/2pi gives the real-valued
// 2-form integrated here over the unit sphere.
//
// The sphere needs two charts: the standard rotation section is singular on
// the -z ray, so a cap around the south pole is integrated with a section
// conjugated by the half-turn about x, whose singularity sits at +z. On
// overlaps the two pullbacks agree pointwise (the structure group of the
// reduced bundle is abelian), so the split introduces no rim corrections.
#pragma once

#include "lightcone/boosting.hpp"

namespace lightcone {

// zeta = (1 / 4 pi p^0)(p^1 dp^2 ^ dp^3 + p^2 dp^3 ^ dp^1 + p^3 dp^1 ^ dp^2)
// evaluated on momentum-space tangent vectors.
inline double zeta_eval(const Eigen::Vector3d& p, const Eigen::Vector3d& u,
                        const Eigen::Vector3d& v) {
  const double r = p.norm();
  if (r <= 0.0) throw ZeroMomentumError("zeta undefined at the origin");
  return p.dot(u.cross(v)) / (4.0 * M_PI * r);
}

// Differential of the shell map p -> spatial(kappa(a)(|p|, p)).
inline Eigen::Vector3d shell_map_differential(const SL2CElement& a, const Eigen::Vector3d& p,
                                              const Eigen::Vector3d& u) {
  const double r = p.norm();
  const FourVector tangent = four(p.dot(u) / r, u[0], u[1], u[2]);
  const FourVector moved = act(a, tangent);
  return Eigen::Vector3d(moved[1], moved[2], moved[3]);
}

// Pullback of zeta under the Lorentz action on the shell.
inline double zeta_pullback(const SL2CElement& a, const Eigen::Vector3d& p,
                            const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  const FourVector q = act(a, four(p.norm(), p[0], p[1], p[2]));
  return zeta_eval(Eigen::Vector3d(q[1], q[2], q[3]), shell_map_differential(a, p, u),
                   shell_map_differential(a, p, v));
}

// J3-coefficient of the projection of a traceless matrix onto the rotation
// generator about z: beta(M) = -2 Im(M11) J3.
inline double beta_j3_coefficient(const Eigen::Matrix2cd& m) { return -2.0 * m(0, 0).imag(); }

// Curvature on left-translated tangents: Omega_A(AX, AY) = -beta([X, Y]),
// returned as the real multiple of J3. Base-point independent.
inline double curvature_eval(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
  return 2.0 * (x(0, 1) * y(1, 0) - x(1, 0) * y(0, 1)).imag();
}

// A smooth SL(2,C)-valued chart section over a punctured sphere, with its
// analytic derivative along tangent vectors.
struct ChartSection {
  // reflect = false: e(x) = R(x), singular at -z.
  // reflect = true: e(x) = g R(kappa(g) x) with g the half-turn about x,
  // singular at +z.
  bool reflect = false;

  static Eigen::Vector3d mirror(const Eigen::Vector3d& x) {
    return Eigen::Vector3d(x[0], -x[1], -x[2]);
  }

  SL2CElement at(const Eigen::Vector3d& x) const {
    if (!reflect) return standard_rotation(x);
    static const SL2CElement g = exp_algebra(M_PI * generators().J1);
    return g * standard_rotation(mirror(x));
  }

  // derivative of the rotation chart at x along u
  static Eigen::Matrix2cd rotation_derivative(const Eigen::Vector3d& x,
                                              const Eigen::Vector3d& u) {
    const double one_plus = 1.0 + x[2];
    if (one_plus < 0.5e-18)
      throw SingularRayError("chart derivative undefined on the -z ray");
    const double f = 1.0 / std::sqrt(2.0 * one_plus);
    const double fp = -f * f * f;  // df/dc

    Eigen::Matrix2cd da, db, dc, m;
    da << 0, -1, 1, 0;
    db << 0, cd(0, 1), cd(0, 1), 0;
    m << one_plus, -cd(x[0], -x[1]), cd(x[0], x[1]), one_plus;
    dc = fp * m + f * Eigen::Matrix2cd::Identity();
    return u[0] * (f * da) + u[1] * (f * db) + u[2] * dc;
  }

  Eigen::Matrix2cd derivative(const Eigen::Vector3d& x, const Eigen::Vector3d& u) const {
    if (!reflect) return rotation_derivative(x, u);
    static const SL2CElement g = exp_algebra(M_PI * generators().J1);
    return g * rotation_derivative(mirror(x), mirror(u));
  }
};

// Pullback by the chart of the helicity-s Chern form, evaluated at x on
// tangents u, v: (s / pi) Im(X12 Y21 - X21 Y12) with X = e(x)^{-1} D_u e.
inline double chern_form_eval(Helicity s, const ChartSection& chart, const Eigen::Vector3d& x,
                              const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
  if (s.two_s == 0) return 0.0;
  const SL2CElement e = chart.at(x);
  const Eigen::Matrix2cd xt = e.adjoint() * chart.derivative(x, u);  // e in SU(2)
  const Eigen::Matrix2cd yt = e.adjoint() * chart.derivative(x, v);
  return s.value() / (2.0 * M_PI) * curvature_eval(xt, yt);
}

// Quadrature over a latitude band of the unit sphere: Gauss-Legendre in the
// polar angle, trapezoid in the azimuth.
struct SphereMesh {
  struct Cell {
    Eigen::Vector3d x, du, dv;  // position and coordinate tangents
    double weight;              // d theta d phi weight
  };
  std::vector<Cell> cells;

  static SphereMesh band(double theta0, double theta1, int n_theta, int n_phi) {
    std::vector<double> gx, gw;
    gauss_legendre(n_theta, gx, gw);
    SphereMesh mesh;
    mesh.cells.reserve(static_cast<size_t>(n_theta) * n_phi);
    const double half = 0.5 * (theta1 - theta0), mid = 0.5 * (theta1 + theta0);
    const double dphi = 2.0 * M_PI / n_phi;
    for (int i = 0; i < n_theta; ++i) {
      const double th = mid + half * gx[i];
      const double wth = half * gw[i];
      const double st = std::sin(th), ct = std::cos(th);
      for (int j = 0; j < n_phi; ++j) {
        const double ph = dphi * j;
        const double cp = std::cos(ph), sp = std::sin(ph);
        Cell c;
        c.x = Eigen::Vector3d(st * cp, st * sp, ct);
        c.du = Eigen::Vector3d(ct * cp, ct * sp, -st);
        c.dv = Eigen::Vector3d(-st * sp, st * cp, 0.0);
        c.weight = wth * dphi;
        mesh.cells.push_back(c);
      }
    }
    return mesh;
  }

  double area() const {
    double a = 0.0;
    for (const auto& c : cells) a += c.weight * c.du.cross(c.dv).norm();
    return a;
  }

  template <typename TwoForm>
  double integrate(TwoForm&& form) const {
    std::vector<cd> terms(cells.size());
    for (size_t i = 0; i < cells.size(); ++i)
      terms[i] = cells[i].weight * form(cells[i].x, cells[i].du, cells[i].dv);
    return terms.empty() ? 0.0 : detail::pairwise_sum(terms, 0, terms.size()).real();
  }
};

struct ChernResult {
  std::vector<double> per_level;
  double value = 0.0;
  bool converged = false;
};

// Two-chart integral of the helicity-s Chern form over the unit sphere,
// refined until stable. The expected value is -2s.
inline ChernResult chern_number(Helicity s, int levels = 3, double cap_radius = 0.2,
                                int base_theta = 32, int base_phi = 64,
                                double stabilization_tol = 1e-4) {
  const ChartSection main{false}, cap{true};
  ChernResult out;
  for (int l = 0; l < levels; ++l) {
    const int nt = base_theta << l, np = base_phi << l;
    const SphereMesh main_mesh = SphereMesh::band(0.0, M_PI - cap_radius, nt, np);
    const int cap_nt = std::max(4, nt / 4);
    const SphereMesh cap_mesh = SphereMesh::band(M_PI - cap_radius, M_PI, cap_nt, np);
    const double value =
        main_mesh.integrate([&](const Eigen::Vector3d& x, const Eigen::Vector3d& u,
                                const Eigen::Vector3d& v) {
          return chern_form_eval(s, main, x, u, v);
        }) +
        cap_mesh.integrate([&](const Eigen::Vector3d& x, const Eigen::Vector3d& u,
                               const Eigen::Vector3d& v) {
          return chern_form_eval(s, cap, x, u, v);
        });
    out.per_level.push_back(value);
  }
  out.value = out.per_level.back();
  out.converged = out.per_level.size() < 2 ||
                  std::abs(out.per_level.back() - out.per_level[out.per_level.size() - 2]) <
                      stabilization_tol;
  return out;
}

// Integral of zeta over the full unit sphere; equals 1.
inline double zeta_sphere_integral(int n_theta = 96, int n_phi = 192) {
  const SphereMesh mesh = SphereMesh::band(0.0, M_PI, n_theta, n_phi);
  return mesh.integrate([](const Eigen::Vector3d& x, const Eigen::Vector3d& u,
                           const Eigen::Vector3d& v) { return zeta_eval(x, u, v); });
}

}  // namespace lightcone
