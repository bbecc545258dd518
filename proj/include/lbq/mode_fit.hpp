#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lbq/bessel.hpp"
#include "lbq/simulator.hpp"

namespace lbq {

/// Node weights describing an analytic eigenmode shape on a geometry, one
/// weight per conserved field per node.  Used both to seed the simulator
/// at equilibrium and as the projection observable for the decay fit.
struct ModeShape {
  int conserved = 1;
  std::vector<double> w;  // node-major: w[node * conserved + i]
};

/// Scalar (temperature) mode of a disk: J_ell(zeta r / R) cos(ell theta).
inline ModeShape disk_scalar_mode(const Geometry& g, int ell, int n) {
  if (g.dim != 2) throw std::invalid_argument("disk_scalar_mode: 2-D geometry required");
  double zeta = bessel_zero((double)ell, n);
  ModeShape m;
  m.conserved = 1;
  m.w.assign(g.node_count(), 0.0);
  for (int y = 0; y < g.extent[1]; ++y)
    for (int x = 0; x < g.extent[0]; ++x) {
      if (!g.is_fluid(x, y, 0)) continue;
      double dx = x - g.center[0], dy = y - g.center[1];
      double r = std::hypot(dx, dy);
      m.w[g.index(x, y, 0)] =
          bessel_j((double)ell, zeta * r / g.radius) * std::cos(ell * std::atan2(dy, dx));
    }
  return m;
}

/// Scalar mode of a sphere: j_ell spherical Bessel profile; the ell = 0
/// radial modes reduce to sin(n pi r / R) / r.
inline ModeShape sphere_scalar_mode(const Geometry& g, int ell, int n) {
  if (g.dim != 3) throw std::invalid_argument("sphere_scalar_mode: 3-D geometry required");
  double zeta = bessel_zero(ell + 0.5, n);
  ModeShape m;
  m.conserved = 1;
  m.w.assign(g.node_count(), 0.0);
  for (int z = 0; z < g.extent[2]; ++z)
    for (int y = 0; y < g.extent[1]; ++y)
      for (int x = 0; x < g.extent[0]; ++x) {
        if (!g.is_fluid(x, y, z)) continue;
        double dx = x - g.center[0], dy = y - g.center[1], dz = z - g.center[2];
        double r = std::hypot(dx, dy, dz);
        double k = zeta / g.radius;
        double v;
        if (ell == 0) {
          v = r < 1e-9 ? k : std::sin(k * r) / r;
        } else {
          v = r < 1e-9 ? 0.0 : bessel_j(ell + 0.5, k * r) / std::sqrt(r);
        }
        m.w[g.index(x, y, z)] = v;
      }
  return m;
}

/// Axisymmetric rotational velocity mode of a disk for momentum-carrying
/// models: u_theta = J_1(zeta_1^n r / R), written on the two momentum
/// fields (conserved = 3: density untouched).
inline ModeShape disk_rotational_mode(const Geometry& g, int n) {
  if (g.dim != 2) throw std::invalid_argument("disk_rotational_mode: 2-D geometry required");
  double zeta = bessel_zero(1.0, n);
  ModeShape m;
  m.conserved = 3;
  m.w.assign((std::size_t)g.node_count() * 3, 0.0);
  for (int y = 0; y < g.extent[1]; ++y)
    for (int x = 0; x < g.extent[0]; ++x) {
      if (!g.is_fluid(x, y, 0)) continue;
      double dx = x - g.center[0], dy = y - g.center[1];
      double r = std::hypot(dx, dy);
      if (r < 1e-9) continue;
      double ut = bessel_j(1.0, zeta * r / g.radius);
      std::size_t base = (std::size_t)g.index(x, y, 0) * 3;
      m.w[base + 1] = -dy / r * ut;
      m.w[base + 2] = dx / r * ut;
    }
  return m;
}

/// Seed the simulator at equilibrium with the mode shape, advance it, and
/// fit the decay rate from the projection of the conserved fields onto the
/// shape between steps t1 and t2 (t1 past the fast transient).
inline double fit_mode_rate(Simulator& sim, const Geometry& g, const ModeShape& mode,
                            int t1, int t2) {
  if (!(0 < t1 && t1 < t2)) throw std::invalid_argument("fit_mode_rate: need 0 < t1 < t2");
  int nc = mode.conserved;
  std::vector<double> w(nc);
  for (int node = 0; node < g.node_count(); ++node) {
    if (!g.fluid[node]) continue;
    for (int i = 0; i < nc; ++i) w[i] = mode.w[(std::size_t)node * nc + i];
    sim.set_equilibrium(node, w);
  }
  auto project = [&]() {
    double v = 0;
    for (int node = 0; node < g.node_count(); ++node) {
      if (!g.fluid[node]) continue;
      for (int i = 0; i < nc; ++i)
        v += mode.w[(std::size_t)node * nc + i] * sim.conserved_moment(node, i);
    }
    return v;
  };
  double c1 = 0;
  for (int t = 1; t <= t2; ++t) {
    sim.step();
    if (t == t1) c1 = project();
  }
  double c2 = project();
  if (!(c1 > 0) == !(c2 > 0) && c1 != 0 && c2 != 0)
    return std::log(c1 / c2) / (t2 - t1);
  throw std::runtime_error("fit_mode_rate: projection changed sign; window too long or mode not captured");
}

}  // namespace lbq
