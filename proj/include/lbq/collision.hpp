#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbq/matrix.hpp"
#include "lbq/scalar.hpp"
#include "lbq/scheme.hpp"

namespace lbq {

/// Linearized relaxation model on top of a scheme: which moments are
/// conserved, the relaxation rate of every non-conserved moment and the
/// equilibrium coupling of non-conserved moments to conserved ones.
/// Collision in moment space is m* = Psi m with
///   Psi = [[I, 0], [Phi, I - S]],  Phi_kj = s_k G_kj,
/// where G maps conserved moments to non-conserved equilibria.
template <class T>
struct CollisionModel {
  std::string kind;
  SchemeDefinition<T> scheme;
  int conserved = 0;          // N
  std::vector<T> rates;       // s_k, meaningful for k >= N
  Matrix<T> psi;              // (J+1) x (J+1)

  int velocity_count() const { return scheme.velocity_count; }
};

namespace detail {

template <class T>
void check_rate(const std::string& kind, const std::string& which, const T& s) {
  double v = ScalarOps<T>::to_double(s);
  if (!(v > 0.0 && v < 2.0))
    throw std::invalid_argument(kind + ": rate " + which +
                                " must lie strictly between 0 and 2 (got " +
                                std::to_string(v) + ")");
}

template <class T>
CollisionModel<T> blank(const std::string& kind, SchemeDefinition<T> scheme,
                        int conserved) {
  CollisionModel<T> m;
  m.kind = kind;
  m.scheme = std::move(scheme);
  m.conserved = conserved;
  int n = m.scheme.velocity_count;
  m.rates.assign(n, T(0));
  m.psi = Matrix<T>(n, n);
  for (int k = 0; k < conserved; ++k) m.psi(k, k) = T(1);
  return m;
}

// Fill the diagonal block and record the rate for one non-conserved row.
template <class T>
void set_rate(CollisionModel<T>& m, int row, const T& s) {
  m.rates[row] = s;
  m.psi(row, row) = T(1) - s;
}

}  // namespace detail

/// Advected heat in one dimension: density conserved, momentum relaxed
/// towards u*lambda*rho with rate s1, energy towards alpha*lambda^2/2*rho
/// with rate s2.
template <class T>
CollisionModel<T> make_thermal_d1q3(const SchemeDefinition<T>& scheme,
                                    const T& u, const T& alpha, const T& s1,
                                    const T& s2) {
  detail::check_rate("thermal-d1q3", "s1", s1);
  detail::check_rate("thermal-d1q3", "s2", s2);
  auto m = detail::blank("thermal-d1q3", scheme, 1);
  const T l = scheme.lambda;
  detail::set_rate(m, 1, s1);
  m.psi(1, 0) = s1 * u * l;
  detail::set_rate(m, 2, s2);
  m.psi(2, 0) = alpha * s2 * l * l * ScalarOps<T>::from_ratio(1, 2);
  return m;
}

/// Linearized acoustics in one dimension: density and momentum conserved,
/// energy relaxed towards alpha*lambda^2/2*rho with rate s.
template <class T>
CollisionModel<T> make_fluid_d1q3(const SchemeDefinition<T>& scheme,
                                  const T& alpha, const T& s) {
  detail::check_rate("fluid-d1q3", "s", s);
  auto m = detail::blank("fluid-d1q3", scheme, 2);
  const T l = scheme.lambda;
  detail::set_rate(m, 2, s);
  m.psi(2, 0) = alpha * s * l * l * ScalarOps<T>::from_ratio(1, 2);
  return m;
}

/// Pure diffusion on the five-velocity planar lattice: density conserved,
/// momenta relaxed to zero with rate s1, energy towards alpha*rho with
/// rate s3, the diagonal second-order moment to zero with rate s4.
template <class T>
CollisionModel<T> make_thermal_d2q5(const SchemeDefinition<T>& scheme,
                                    const T& alpha, const T& s1, const T& s3,
                                    const T& s4) {
  detail::check_rate("thermal-d2q5", "s1", s1);
  detail::check_rate("thermal-d2q5", "s3", s3);
  detail::check_rate("thermal-d2q5", "s4", s4);
  auto m = detail::blank("thermal-d2q5", scheme, 1);
  detail::set_rate(m, 1, s1);
  detail::set_rate(m, 2, s1);
  detail::set_rate(m, 3, s3);
  m.psi(3, 0) = alpha * s3;
  detail::set_rate(m, 4, s4);
  return m;
}

/// Advected scalar on the nine-velocity lattice. Density conserved; the
/// momenta relax towards (u,v)*lambda*rho; the energy towards a3*rho with
/// a3 = 3(u^2+v^2) - 4 + 6 xi; the remaining equilibria carry the free
/// coefficients a4, a5, a6 plus a7 = u^2 - v^2 and a8 = u v.
template <class T>
CollisionModel<T> make_advective_d2q9(const SchemeDefinition<T>& scheme,
                                      const T& u, const T& v, const T& xi,
                                      const T& a4, const T& a5, const T& a6,
                                      const T& s1, const T& s3, const T& s4,
                                      const T& s5, const T& s7, const T& s8) {
  detail::check_rate("advective-d2q9", "s1", s1);
  detail::check_rate("advective-d2q9", "s3", s3);
  detail::check_rate("advective-d2q9", "s4", s4);
  detail::check_rate("advective-d2q9", "s5", s5);
  detail::check_rate("advective-d2q9", "s7", s7);
  detail::check_rate("advective-d2q9", "s8", s8);
  auto m = detail::blank("advective-d2q9", scheme, 1);
  const T l = scheme.lambda;
  detail::set_rate(m, 1, s1);
  m.psi(1, 0) = s1 * u * l;
  detail::set_rate(m, 2, s1);
  m.psi(2, 0) = s1 * v * l;
  const T a3 = T(3) * (u * u + v * v) - T(4) + T(6) * xi;
  detail::set_rate(m, 3, s3);
  m.psi(3, 0) = a3 * s3;
  detail::set_rate(m, 4, s4);
  m.psi(4, 0) = a4 * s4;
  detail::set_rate(m, 5, s5);
  m.psi(5, 0) = a5 * u * s5;
  detail::set_rate(m, 6, s5);
  m.psi(6, 0) = a6 * v * s5;
  detail::set_rate(m, 7, s7);
  m.psi(7, 0) = (u * u - v * v) * s7;
  detail::set_rate(m, 8, s8);
  m.psi(8, 0) = u * v * s8;
  return m;
}

/// Linearized athermal flow on the nine-velocity lattice: density and both
/// momenta conserved. Energy relaxes towards -2 rho, energy square towards
/// rho, and the heat fluxes towards -q/lambda.
template <class T>
CollisionModel<T> make_fluid_d2q9(const SchemeDefinition<T>& scheme,
                                  const T& s3, const T& s4, const T& s5,
                                  const T& s7) {
  detail::check_rate("fluid-d2q9", "s3", s3);
  detail::check_rate("fluid-d2q9", "s4", s4);
  detail::check_rate("fluid-d2q9", "s5", s5);
  detail::check_rate("fluid-d2q9", "s7", s7);
  auto m = detail::blank("fluid-d2q9", scheme, 3);
  const T l = scheme.lambda;
  detail::set_rate(m, 3, s3);
  m.psi(3, 0) = T(-2) * s3;
  detail::set_rate(m, 4, s4);
  m.psi(4, 0) = s4;
  detail::set_rate(m, 5, s5);
  m.psi(5, 1) = -(s5 / l);
  detail::set_rate(m, 6, s5);
  m.psi(6, 2) = -(s5 / l);
  detail::set_rate(m, 7, s7);
  detail::set_rate(m, 8, s7);
  return m;
}

/// Pure diffusion on the seven-velocity cubic lattice: density conserved,
/// momenta relaxed to zero with rate s1, the two second-order tensors with
/// rate s4, the energy towards alpha*rho with rate s6.
template <class T>
CollisionModel<T> make_thermal_d3q7(const SchemeDefinition<T>& scheme,
                                    const T& alpha, const T& s1, const T& s4,
                                    const T& s6) {
  detail::check_rate("thermal-d3q7", "s1", s1);
  detail::check_rate("thermal-d3q7", "s4", s4);
  detail::check_rate("thermal-d3q7", "s6", s6);
  auto m = detail::blank("thermal-d3q7", scheme, 1);
  detail::set_rate(m, 1, s1);
  detail::set_rate(m, 2, s1);
  detail::set_rate(m, 3, s1);
  detail::set_rate(m, 4, s4);
  detail::set_rate(m, 5, s4);
  detail::set_rate(m, 6, s6);
  m.psi(6, 0) = alpha * s6;
  return m;
}

/// Linearized athermal flow on the nineteen-velocity cubic lattice:
/// density and the three momenta conserved. The energy equilibrium is
/// theta*lambda^2*rho with theta = 57 alpha^2 - 30 so that the sound
/// speed equals alpha*lambda; the energy-square equilibrium is
/// beta*lambda^4*rho; every other equilibrium vanishes.
template <class T>
CollisionModel<T> make_fluid_d3q19(const SchemeDefinition<T>& scheme,
                                   const T& alpha, const T& beta, const T& s4,
                                   const T& s5, const T& s10, const T& s13,
                                   const T& s14, const T& s16) {
  detail::check_rate("fluid-d3q19", "s4", s4);
  detail::check_rate("fluid-d3q19", "s5", s5);
  detail::check_rate("fluid-d3q19", "s10", s10);
  detail::check_rate("fluid-d3q19", "s13", s13);
  detail::check_rate("fluid-d3q19", "s14", s14);
  detail::check_rate("fluid-d3q19", "s16", s16);
  auto m = detail::blank("fluid-d3q19", scheme, 4);
  const T l = scheme.lambda;
  const T theta = ScalarOps<T>::from_int(57) * alpha * alpha -
                  ScalarOps<T>::from_int(30);
  detail::set_rate(m, 4, s4);
  m.psi(4, 0) = s4 * theta * l * l;
  for (int k = 5; k <= 9; ++k) detail::set_rate(m, k, s5);
  for (int k = 10; k <= 12; ++k) detail::set_rate(m, k, s10);
  detail::set_rate(m, 13, s13);
  m.psi(13, 0) = s13 * beta * l * l * l * l;
  detail::set_rate(m, 14, s14);
  detail::set_rate(m, 15, s14);
  for (int k = 16; k <= 18; ++k) detail::set_rate(m, k, s16);
  return m;
}

}  // namespace lbq
