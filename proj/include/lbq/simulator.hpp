#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "lbq/collision.hpp"

namespace lbq {

/// A lattice domain: either a fully periodic box or the inside of a disk /
/// sphere (optionally one octant of it, closed by mirror planes). Solid
/// nodes carry no populations; every fluid-to-solid link stores the exact
/// fraction q of the link lying inside the fluid.
struct Geometry {
  enum class Kind { periodic, disk, sphere, octant };
  Kind kind = Kind::periodic;
  int dim = 2;
  std::array<int, 3> extent = {1, 1, 1};
  double radius = 0.0;
  std::array<double, 3> center = {0.0, 0.0, 0.0};
  // mirror-plane parity for octant domains: +1 symmetric, -1 antisymmetric
  std::array<int, 3> parity = {1, 1, 1};
  std::vector<std::uint8_t> fluid;  // 1 = fluid node

  int node_count() const { return extent[0] * extent[1] * extent[2]; }
  int index(int x, int y, int z) const {
    return (z * extent[1] + y) * extent[0] + x;
  }
  bool is_fluid(int x, int y, int z) const {
    return fluid[index(x, y, z)] != 0;
  }
};

inline Geometry make_periodic(int dim, int nx, int ny = 1, int nz = 1) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("make_periodic: dim must be 1..3");
  Geometry g;
  g.kind = Geometry::Kind::periodic;
  g.dim = dim;
  g.extent = {nx, dim > 1 ? ny : 1, dim > 2 ? nz : 1};
  g.fluid.assign(g.node_count(), 1);
  return g;
}

namespace detail {

inline void fill_ball(Geometry& g) {
  g.fluid.assign(g.node_count(), 0);
  for (int z = 0; z < g.extent[2]; ++z)
    for (int y = 0; y < g.extent[1]; ++y)
      for (int x = 0; x < g.extent[0]; ++x) {
        double dx = x - g.center[0], dy = y - g.center[1], dz = z - g.center[2];
        if (g.dim < 3) dz = 0;
        if (g.dim < 2) dy = 0;
        if (dx * dx + dy * dy + dz * dz < g.radius * g.radius)
          g.fluid[g.index(x, y, z)] = 1;
      }
}

}  // namespace detail

inline Geometry make_disk(int nx, int ny, double radius,
                          double offset_x = 0.5, double offset_y = 0.3) {
  Geometry g;
  g.kind = Geometry::Kind::disk;
  g.dim = 2;
  g.extent = {nx, ny, 1};
  g.radius = radius;
  g.center = {(nx - 1) / 2.0 + offset_x, (ny - 1) / 2.0 + offset_y, 0.0};
  detail::fill_ball(g);
  return g;
}

inline Geometry make_sphere(int nx, int ny, int nz, double radius,
                            double offset_x = 0.5, double offset_y = 0.3,
                            double offset_z = 0.2) {
  Geometry g;
  g.kind = Geometry::Kind::sphere;
  g.dim = 3;
  g.extent = {nx, ny, nz};
  g.radius = radius;
  g.center = {(nx - 1) / 2.0 + offset_x, (ny - 1) / 2.0 + offset_y,
              (nz - 1) / 2.0 + offset_z};
  detail::fill_ball(g);
  return g;
}

/// One octant of a sphere whose center sits on the three mirror planes,
/// which pass midway between node layer 0 and its reflected image. Parity
/// flags select the symmetry sector reconstructed by the mirrors.
inline Geometry make_octant(double radius, std::array<int, 3> parity) {
  for (int p : parity)
    if (p != 1 && p != -1)
      throw std::invalid_argument("make_octant: parity flags must be +1 or -1");
  Geometry g;
  g.kind = Geometry::Kind::octant;
  g.dim = 3;
  int n = (int)std::ceil(radius) + 1;
  g.extent = {n, n, n};
  g.radius = radius;
  g.center = {-0.5, -0.5, -0.5};
  g.parity = parity;
  detail::fill_ball(g);
  return g;
}

struct BoundaryRule {
  enum class Kind { bounce_back, anti_bounce_back };
  Kind kind = Kind::anti_bounce_back;
  int order = 1;  // 1 = linear, 2 = quadratic interpolation
};

/// Fluid node x whose neighbor along outgoing velocity `out` is solid;
/// q in (0,1] is the fluid fraction of that link.
struct BoundaryLink {
  int node;  // flat index
  int out;   // outgoing velocity index
  double q;
};

/// Builds the cut-link table for a disk/sphere/octant geometry by solving
/// |x + t v - c|^2 = R^2 on each fluid-to-solid link.
template <class T>
std::vector<BoundaryLink> build_boundary_links(const Geometry& g,
                                               const SchemeDefinition<T>& sch) {
  if (g.kind == Geometry::Kind::periodic)
    throw std::invalid_argument("build_boundary_links: periodic box has no boundary");
  if (sch.dim != g.dim)
    throw std::invalid_argument("build_boundary_links: scheme dimension " +
                                std::to_string(sch.dim) + " != geometry dimension " +
                                std::to_string(g.dim));
  std::vector<BoundaryLink> links;
  for (int z = 0; z < g.extent[2]; ++z)
    for (int y = 0; y < g.extent[1]; ++y)
      for (int x = 0; x < g.extent[0]; ++x) {
        if (!g.is_fluid(x, y, z)) continue;
        for (int j = 1; j < sch.velocity_count; ++j) {
          int tx = x + sch.velocities[j][0];
          int ty = y + sch.velocities[j][1];
          int tz = z + sch.velocities[j][2];
          bool inside = tx >= 0 && tx < g.extent[0] && ty >= 0 &&
                        ty < g.extent[1] && tz >= 0 && tz < g.extent[2];
          if (g.kind == Geometry::Kind::octant && !inside &&
              (tx < 0 || ty < 0 || tz < 0))
            continue;  // handled by the mirror planes
          if (inside && g.is_fluid(tx, ty, tz)) continue;
          // solve |p + t v|^2 = R^2, p = x - c
          double p[3] = {x - g.center[0], y - g.center[1], z - g.center[2]};
          double v[3] = {(double)sch.velocities[j][0], (double)sch.velocities[j][1],
                         (double)sch.velocities[j][2]};
          if (g.dim < 3) p[2] = v[2] = 0;
          if (g.dim < 2) p[1] = v[1] = 0;
          double a = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
          double b = 2 * (p[0] * v[0] + p[1] * v[1] + p[2] * v[2]);
          double c = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - g.radius * g.radius;
          double disc = b * b - 4 * a * c;
          double q = 1.0;
          if (disc >= 0) {
            double t = (-b + std::sqrt(disc)) / (2 * a);
            if (t > 0.0 && t <= 1.0) q = t;
          }
          links.push_back({g.index(x, y, z), j, q});
        }
      }
  return links;
}

/// Collide-and-stream time stepper with two buffers (pull streaming) and
/// interpolated (anti-)bounce-back on cut links.
class Simulator {
 public:
  Simulator(const CollisionModel<double>& model, const Geometry& geometry,
            BoundaryRule rule = {})
      : model_(model), geo_(geometry), rule_(rule) {
    const auto& sch = model_.scheme;
    if (sch.dim != geo_.dim)
      throw std::invalid_argument("Simulator: scheme dimension " +
                                  std::to_string(sch.dim) +
                                  " != geometry dimension " + std::to_string(geo_.dim));
    const int J1 = sch.velocity_count;
    // one-step collision in population space, precomputed once
    collide_ = sch.moment_inverse * (model_.psi * sch.moment_matrix);
    // equilibrium populations as a linear map of conserved moments
    Matrix<double> e(J1, model_.conserved);
    for (int k = 0; k < J1; ++k)
      for (int j = 0; j < model_.conserved; ++j)
        e(k, j) = k < model_.conserved
                      ? (k == j ? 1.0 : 0.0)
                      : model_.psi(k, j) / model_.rates[k];
    equilibrium_ = sch.moment_inverse * e;
    f_[0].assign((std::size_t)geo_.node_count() * J1, 0.0);
    f_[1].assign(f_[0].size(), 0.0);
    fstar_.assign(f_[0].size(), 0.0);
    if (geo_.kind != Geometry::Kind::periodic)
      links_ = build_boundary_links(geo_, sch);
    for (const auto& l : links_) link_at_[key(l.node, l.out)] = l.q;
  }

  const Geometry& geometry() const { return geo_; }
  const CollisionModel<double>& model() const { return model_; }
  const std::vector<BoundaryLink>& links() const { return links_; }
  long step_index() const { return time_; }

  double& population(int node, int j) {
    return f_[cur_][(std::size_t)node * model_.scheme.velocity_count + j];
  }
  double population(int node, int j) const {
    return f_[cur_][(std::size_t)node * model_.scheme.velocity_count + j];
  }

  /// Overwrites one node with the equilibrium populations of the given
  /// conserved moments.
  void set_equilibrium(int node, const std::vector<double>& w) {
    if ((int)w.size() != model_.conserved)
      throw std::invalid_argument("set_equilibrium: expected " +
                                  std::to_string(model_.conserved) +
                                  " conserved moments");
    const int J1 = model_.scheme.velocity_count;
    for (int j = 0; j < J1; ++j) {
      double v = 0;
      for (int i = 0; i < model_.conserved; ++i) v += equilibrium_(j, i) * w[i];
      population(node, j) = v;
    }
  }

  /// Conserved moment i at a node (rows of M are exact for the conserved block).
  double conserved_moment(int node, int i) const {
    const int J1 = model_.scheme.velocity_count;
    double v = 0;
    for (int j = 0; j < J1; ++j)
      v += model_.scheme.moment_matrix(i, j) * population(node, j);
    return v;
  }

  double total(int i) const {
    double s = 0;
    for (int n = 0; n < geo_.node_count(); ++n)
      if (geo_.fluid[n]) s += conserved_moment(n, i);
    return s;
  }

  void step() {
    const auto& sch = model_.scheme;
    const int J1 = sch.velocity_count;
    const int nx = geo_.extent[0], ny = geo_.extent[1], nz = geo_.extent[2];
    const auto& fin = f_[cur_];
    auto& fout = f_[1 - cur_];
    // collide
    double check = 0;
    for (int n = 0; n < geo_.node_count(); ++n) {
      if (!geo_.fluid[n]) continue;
      const double* src = &fin[(std::size_t)n * J1];
      double* dst = &fstar_[(std::size_t)n * J1];
      for (int a = 0; a < J1; ++a) {
        double v = 0;
        for (int b = 0; b < J1; ++b) v += collide_(a, b) * src[b];
        dst[a] = v;
        check += v;
      }
    }
    if (std::isnan(check))
      throw std::runtime_error("step: NaN detected at step " + std::to_string(time_));
    // stream (pull)
    for (int z = 0; z < nz; ++z)
      for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) {
          int n = geo_.index(x, y, z);
          if (!geo_.fluid[n]) continue;
          for (int j = 0; j < J1; ++j)
            fout[(std::size_t)n * J1 + j] = pull(x, y, z, j);
        }
    cur_ = 1 - cur_;
    ++time_;
  }

 private:
  static long long key(int node, int j) { return (long long)node * 32 + j; }

  bool fluid_at(int x, int y, int z) const {
    return x >= 0 && x < geo_.extent[0] && y >= 0 && y < geo_.extent[1] &&
           z >= 0 && z < geo_.extent[2] && geo_.is_fluid(x, y, z);
  }

  double star(int x, int y, int z, int j) const {
    return fstar_[(std::size_t)geo_.index(x, y, z) * model_.scheme.velocity_count + j];
  }

  // post-collision population at the pull source, folding periodic wrap
  // and mirror planes; returns false if the source is solid or outside
  bool source_star(int x, int y, int z, int j, double& value) const {
    const auto& sch = model_.scheme;
    int sx = x - sch.velocities[j][0];
    int sy = y - sch.velocities[j][1];
    int sz = z - sch.velocities[j][2];
    double sign = 1.0;
    int jj = j;
    if (geo_.kind == Geometry::Kind::periodic) {
      sx = (sx + geo_.extent[0]) % geo_.extent[0];
      sy = (sy + geo_.extent[1]) % geo_.extent[1];
      sz = (sz + geo_.extent[2]) % geo_.extent[2];
    } else if (geo_.kind == Geometry::Kind::octant) {
      int s[3] = {sx, sy, sz};
      for (int d = 0; d < 3; ++d)
        if (s[d] < 0) {
          s[d] = -1 - s[d];  // mirror plane midway below layer 0
          jj = mirror(jj, d);
          sign *= geo_.parity[d];
        }
      sx = s[0]; sy = s[1]; sz = s[2];
    }
    if (!fluid_at(sx, sy, sz)) return false;
    value = sign * star(sx, sy, sz, jj);
    return true;
  }

  int mirror(int j, int d) const {
    const auto& sch = model_.scheme;
    auto v = sch.velocities[j];
    v[d] = -v[d];
    for (int k = 0; k < sch.velocity_count; ++k)
      if (sch.velocities[k] == v) return k;
    throw std::logic_error("mirror: velocity set not reflection-closed");
  }

  double pull(int x, int y, int z, int j) {
    double v;
    if (source_star(x, y, z, j, v)) return v;
    // missing population: reconstruct from the cut link along the
    // opposite (outgoing) direction
    const auto& sch = model_.scheme;
    int out = sch.opposite(j);
    int n = geo_.index(x, y, z);
    auto it = link_at_.find(key(n, out));
    if (it == link_at_.end())
      throw std::logic_error("pull: missing population without a boundary link");
    double q = it->second;
    double wall = rule_.kind == BoundaryRule::Kind::anti_bounce_back ? -1.0 : 1.0;
    int ox = sch.velocities[out][0], oy = sch.velocities[out][1],
        oz = sch.velocities[out][2];
    bool n1 = fluid_at(x - ox, y - oy, z - oz);      // one node inward
    bool n2 = fluid_at(x - 2 * ox, y - 2 * oy, z - 2 * oz);
    if (rule_.order == 2 && n1 && n2) {
      if (q < 0.5)
        return wall * (q * (1 + 2 * q) * star(x, y, z, out) +
                       (1 + 2 * q) * (1 - 2 * q) * star(x - ox, y - oy, z - oz, out) -
                       q * (1 - 2 * q) * star(x - 2 * ox, y - 2 * oy, z - 2 * oz, out));
      return wall * (1.0 / (q * (2 * q + 1))) * star(x, y, z, out) +
             ((2 * q - 1) / q) * star(x, y, z, j) -
             ((2 * q - 1) / (2 * q + 1)) * star(x - ox, y - oy, z - oz, j);
    }
    if (q < 0.5 && n1)
      return wall * (2 * q * star(x, y, z, out) +
                     (1 - 2 * q) * star(x - ox, y - oy, z - oz, out));
    if (q >= 0.5)
      return wall * (1.0 / (2 * q)) * star(x, y, z, out) +
             (1 - 1.0 / (2 * q)) * star(x, y, z, j);
    // thin-fluid fallback: halfway reflection
    return wall * star(x, y, z, out);
  }

  CollisionModel<double> model_;
  Geometry geo_;
  BoundaryRule rule_;
  Matrix<double> collide_{1, 1};
  Matrix<double> equilibrium_{1, 1};
  std::vector<double> f_[2], fstar_;
  std::vector<BoundaryLink> links_;
  std::unordered_map<long long, double> link_at_;
  int cur_ = 0;
  long time_ = 0;
};

}  // namespace lbq
