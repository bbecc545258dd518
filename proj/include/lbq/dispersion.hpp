#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "lbq/collision.hpp"

namespace lbq {

/// Plane-wave update matrix G = B M^{-1} Psi M for a wave vector k
/// (radians per lattice unit): advancing one time step multiplies the
/// moment vector of a plane-wave profile by G.
struct AmplificationMatrix {
  Eigen::MatrixXcd g;
  std::vector<double> k;  // per spatial direction
  double dt = 1.0;
};

struct MeasuredRate {
  double gamma_num = 0.0;      // decay rate -ln|z| / dt
  double relative_error = 0.0; // |gamma_num / gamma_guess - 1|
  std::complex<double> z;      // selected eigenvalue
  bool oscillatory = false;    // |Im ln z| > pi/2: not a pure decay mode
};

inline AmplificationMatrix amplification(const CollisionModel<double>& model,
                                         const std::vector<double>& k) {
  const auto& sch = model.scheme;
  if ((int)k.size() != sch.dim)
    throw std::invalid_argument("amplification: wave vector dimension " +
                                std::to_string(k.size()) + " != scheme dimension " +
                                std::to_string(sch.dim));
  for (double kc : k)
    if (std::abs(kc) > M_PI + 1e-12)
      throw std::invalid_argument("amplification: |k| component exceeds pi");
  const int J1 = sch.velocity_count;
  Eigen::MatrixXcd m(J1, J1), minv(J1, J1), psi(J1, J1);
  for (int a = 0; a < J1; ++a)
    for (int b = 0; b < J1; ++b) {
      m(a, b) = sch.moment_matrix(a, b);
      minv(a, b) = sch.moment_inverse(a, b);
      psi(a, b) = model.psi(a, b);
    }
  Eigen::MatrixXcd bmat = Eigen::MatrixXcd::Zero(J1, J1);
  for (int j = 0; j < J1; ++j) {
    double phase = 0.0;
    for (int d = 0; d < sch.dim; ++d) phase += k[d] * sch.velocities[j][d];
    bmat(j, j) = std::polar(1.0, phase);
  }
  AmplificationMatrix out;
  out.g = bmat * minv * psi * m;
  out.k = k;
  out.dt = 1.0 / sch.lambda;  // unit lattice spacing
  return out;
}

inline std::vector<std::complex<double>> spectrum(const AmplificationMatrix& am) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(am.g, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigenvalue iteration failed");
  std::vector<std::complex<double>> z(es.eigenvalues().size());
  for (int i = 0; i < (int)z.size(); ++i) z[i] = es.eigenvalues()(i);
  return z;
}

/// Picks the eigenvalue of G nearest to exp(-gamma_guess * dt) and reads
/// off the numerical decay rate. A mode whose phase exceeds pi/2 is
/// flagged as oscillatory rather than silently reported.
inline MeasuredRate measured_rate(const AmplificationMatrix& am,
                                  double gamma_guess) {
  if (!(gamma_guess >= 0.0) || gamma_guess * am.dt >= 1.0)
    throw std::invalid_argument(
        "measured_rate: rate guess must satisfy 0 <= gamma * dt < 1");
  auto zs = spectrum(am);
  std::complex<double> target = std::exp(std::complex<double>(-gamma_guess * am.dt, 0));
  MeasuredRate r;
  double best = 1e300;
  for (auto z : zs) {
    double d = std::abs(z - target);
    if (d < best) {
      best = d;
      r.z = z;
    }
  }
  r.gamma_num = -std::log(std::abs(r.z)) / am.dt;
  r.relative_error = gamma_guess > 0.0
                         ? std::abs(r.gamma_num / gamma_guess - 1.0)
                         : std::abs(r.gamma_num);
  r.oscillatory = std::abs(std::arg(r.z)) > M_PI / 2;
  return r;
}

/// Least-squares slope of log(error) versus log(k): the observed order of
/// accuracy of a k-sweep.
inline double order_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4)
    throw std::invalid_argument("order_fit: need at least 4 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [k, err] : points) {
    if (!(k > 0.0) || !(err > 0.0))
      throw std::invalid_argument(
          "order_fit: wavenumbers and errors must be positive");
    double x = std::log(k), y = std::log(err);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  double n = (double)points.size();
  double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-300)
    throw std::invalid_argument("order_fit: degenerate abscissas");
  return (n * sxy - sx * sy) / den;
}

}  // namespace lbq
