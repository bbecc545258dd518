#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lbq/scalar.hpp"

namespace lbq {

/// A set of relaxation parameters (as sigma values, sigma = 1/s - 1/2)
/// that cancels the fourth-order error coefficients of a scheme.
template <class T>
struct QuarticSolution {
  std::string family;
  std::vector<std::pair<std::string, T>> sigma;  // moment name -> sigma
  std::vector<std::string> free_parameters;
  std::string note;
};

template <class T>
T sigma_to_rate(const T& sigma) {
  return T(1) / (sigma + ScalarOps<T>::from_ratio(1, 2));
}

template <class T>
T rate_to_sigma(const T& s) {
  return T(1) / s - ScalarOps<T>::from_ratio(1, 2);
}

namespace detail {

template <class T>
void check_sigma(const std::string& family, const std::string& name,
                 const T& sigma) {
  double v = ScalarOps<T>::to_double(sigma);
  if (!(v > 0.0))
    throw std::domain_error(family + ": computed " + name + " = " +
                            std::to_string(v) +
                            " implies a relaxation rate outside (0,2)");
}

}  // namespace detail

/// Rest-advection heat scheme on three velocities: the energy sigma that
/// cancels the fourth-order term of the diffusion equation.
template <class T>
T quartic_d1q3_thermal(const T& sigma1, const T& alpha) {
  if (ScalarOps<T>::is_zero(T(1) - alpha))
    throw std::domain_error(
        "quartic_d1q3_thermal: alpha = 1 makes the diffusivity degenerate");
  T num = ScalarOps<T>::from_int(2) - ScalarOps<T>::from_int(3) * alpha +
          ScalarOps<T>::from_int(12) * alpha * sigma1 * sigma1;
  T den = ScalarOps<T>::from_int(12) * sigma1 * (T(1) - alpha);
  T sigma2 = num / den;
  detail::check_sigma("quartic_d1q3_thermal", "sigma2", sigma2);
  return sigma2;
}

/// Five-velocity planar heat scheme: (sigma3, sigma4) cancelling both
/// fourth-order coefficients.
template <class T>
std::pair<T, T> quartic_d2q5(const T& sigma1, const T& alpha) {
  if (ScalarOps<T>::is_zero(T(1) - alpha))
    throw std::domain_error("quartic_d2q5: alpha = 1 is degenerate");
  T one_m = T(1) - alpha;
  T sigma3 = sigma1 * (alpha + ScalarOps<T>::from_int(4)) / one_m -
             (ScalarOps<T>::from_int(2) + ScalarOps<T>::from_int(3) * alpha) /
                 (ScalarOps<T>::from_int(12) * sigma1 * one_m);
  T sigma4 = T(1) / (ScalarOps<T>::from_int(6) * sigma1);
  detail::check_sigma("quartic_d2q5", "sigma3", sigma3);
  detail::check_sigma("quartic_d2q5", "sigma4", sigma4);
  return {sigma3, sigma4};
}

/// Seven-velocity cubic heat scheme: (sigma4, sigma6) cancelling both
/// fourth-order coefficients.
template <class T>
std::pair<T, T> quartic_d3q7(const T& sigma1, const T& alpha) {
  if (ScalarOps<T>::is_zero(T(1) - alpha))
    throw std::domain_error("quartic_d3q7: alpha = 1 is degenerate");
  T one_m = T(1) - alpha;
  T sigma4 = T(1) / (ScalarOps<T>::from_int(6) * sigma1);
  T sigma6 = (alpha + ScalarOps<T>::from_int(6)) / one_m * sigma1 -
             (ScalarOps<T>::from_int(4) + ScalarOps<T>::from_int(3) * alpha) /
                 (ScalarOps<T>::from_int(12) * one_m) / sigma1;
  detail::check_sigma("quartic_d3q7", "sigma4", sigma4);
  detail::check_sigma("quartic_d3q7", "sigma6", sigma6);
  return {sigma4, sigma6};
}

/// Nine-velocity advected-scalar scheme at rest: the equilibrium
/// parameters (xi, a4) that cancel both fourth-order coefficients for a
/// given sigma1 when all relaxation rates are equal.
template <class T>
std::pair<T, T> quartic_d2q9_thermal(const T& sigma1) {
  T pole = T(1) - ScalarOps<T>::from_int(8) * sigma1 * sigma1;
  if (ScalarOps<T>::is_zero(pole))
    throw std::domain_error(
        "quartic_d2q9_thermal: sigma1 = 1/sqrt(8) is a pole of the solution");
  T xi = ScalarOps<T>::from_ratio(2, 3) *
         (T(1) - ScalarOps<T>::from_int(6) * sigma1 * sigma1) / pole;
  T a4 = ScalarOps<T>::from_int(-2) *
         (T(1) - ScalarOps<T>::from_int(2) * sigma1 * sigma1) / pole;
  return {xi, a4};
}

/// Two-rate restriction of the same scheme (one sigma for the momenta and
/// the odd moments, one for the rest): the unique quartic pair.
template <class T>
std::pair<T, T> quartic_d2q9_thermal_trt() {
  T r3 = ScalarOps<T>::sqrt3();
  return {r3 / ScalarOps<T>::from_int(6), r3 / ScalarOps<T>::from_int(3)};
}

/// Nine-velocity athermal flow: (sigma5, sigma7) making the third-order
/// shear-mode determinant defect vanish identically.
template <class T>
std::pair<T, T> quartic_d2q9_stokes() {
  T r3 = ScalarOps<T>::sqrt3();
  return {r3 / ScalarOps<T>::from_int(3), r3 / ScalarOps<T>::from_int(6)};
}

/// Third-order (in time step) defect of the shear-mode determinant for the
/// nine-velocity athermal scheme, at unit time step and lattice speed
/// `lambda`. Vanishes identically at the quartic pair.
template <class T>
T delta_m3(const T& sigma5, const T& sigma7, const T& kx, const T& ky,
           const T& lambda = T(1)) {
  T k2 = kx * kx + ky * ky;
  T c40 = T(-1) - ScalarOps<T>::from_int(4) * sigma7 * sigma7 +
          ScalarOps<T>::from_int(8) * sigma5 * sigma7;
  T c22 = T(1) - ScalarOps<T>::from_int(4) * sigma7 * sigma7 -
          ScalarOps<T>::from_int(4) * sigma5 * sigma7;
  T l2 = lambda * lambda;
  T l6 = l2 * l2 * l2;
  T bracket = c40 * (kx * kx * kx * kx + ky * ky * ky * ky) +
              ScalarOps<T>::from_int(2) * c22 * kx * kx * ky * ky;
  return -(l6 / ScalarOps<T>::from_int(108)) * sigma7 * k2 * bracket;
}

/// Viscosity implied by the nine-velocity quartic pair, in units of
/// lambda^2 * dt: 1/sqrt(108).
inline double quartic_d2q9_stokes_viscosity() { return 1.0 / std::sqrt(108.0); }

/// The three-velocity acoustic scheme admits no full quartic tuning; this
/// sigma cancels only the third-order momentum coefficient. Caveat: mass
/// conservation remains second-order accurate, so the scheme as a whole is
/// not upgraded.
inline double d1q3_fluid_third_order_sigma() { return 1.0 / std::sqrt(6.0); }

/// Nineteen-velocity athermal flow: the unique nontrivial family cancelling
/// the fourth-order shear-mode conditions. Energy and energy-square rates
/// stay free.
template <class T>
QuarticSolution<T> quartic_d3q19(const T& sigma4, const T& sigma13) {
  T r3 = ScalarOps<T>::sqrt3();
  T s12 = r3 / ScalarOps<T>::from_int(6);  // 1/sqrt(12)
  T s3 = r3 / ScalarOps<T>::from_int(3);   // 1/sqrt(3)
  QuarticSolution<T> q;
  q.family = "d3q19-stokes";
  q.sigma = {{"energy", sigma4},          {"stress", s12},
             {"energy_flux", s3},         {"energy_square", sigma13},
             {"weighted_tensor", s12},    {"third_order", s3}};
  q.free_parameters = {"energy", "energy_square"};
  q.note = "energy and energy-square rates unconstrained";
  detail::check_sigma("quartic_d3q19", "energy sigma", sigma4);
  detail::check_sigma("quartic_d3q19", "energy-square sigma", sigma13);
  return q;
}

/// The eight algebraic conditions equivalent to fourth-order accuracy of
/// the shear modes of the nineteen-velocity scheme. All eight vanish on
/// the quartic family and only there (up to the free rates). The energy
/// and energy-square sigmas do not enter; they are accepted so a full
/// parameter set can be audited at once.
template <class T>
std::vector<T> appendix_residuals(const T& /*sigma4*/, const T& s5,
                                  const T& s10, const T& /*sigma13*/,
                                  const T& s14, const T& s16) {
  auto I = [](long v) { return ScalarOps<T>::from_int(v); };
  auto pw = [](T b, int e) {
    T r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  std::vector<T> r;
  r.push_back(I(2) * s5 * s10 - I(4) * s5 * s5 + I(6) * s5 * s16 - I(1));
  r.push_back(I(80) * pw(s5, 4) - I(32) * pw(s5, 3) * s10 +
              I(24) * pw(s5, 2) * s10 * s16 + I(12) * s14 * s16 * pw(s5, 2) -
              I(8) * pw(s5, 2) - I(4) * pw(s5, 2) * pw(s10, 2) +
              I(12) * pw(s5, 2) * pw(s16, 2) - I(12) * pw(s5, 2) * s14 * s10 -
              I(12) * s5 * s16 * s14 * s10 + I(6) * s5 * s14 * pw(s10, 2) -
              I(8) * s5 * s16 + I(6) * s5 * pw(s16, 2) * s14 - s14 * s16 +
              s14 * s10 + I(1));
  r.push_back(I(-48) * pw(s5, 5) * s10 + I(44) * pw(s5, 4) * pw(s10, 2) +
              I(2000) * pw(s5, 5) * s16 + I(95) * pw(s5, 2) -
              I(16) * pw(s5, 4) * s14 * s10 + I(292) * s14 * s16 * pw(s5, 2) +
              I(68) * pw(s5, 2) * s14 * s10 - I(272) * pw(s5, 4) * s16 * s14 -
              I(1032) * pw(s5, 3) * pw(s16, 2) * s14 +
              I(56) * pw(s5, 3) * s14 * pw(s10, 2) - I(320) * pw(s5, 6) -
              I(1048) * pw(s5, 4) * s10 * s16 + s14 * s14 +
              I(60) * pw(s5, 2) * pw(s16, 2) * s14 * s14 -
              I(16) * s5 * s16 * s14 * s14 +
              I(72) * pw(s5, 2) * s14 * s14 * s10 * s16 -
              I(8) * s5 * s14 * s14 * s10 + I(24) * pw(s5, 3) * s14 +
              I(12) * pw(s5, 2) * s14 * s14 * pw(s10, 2) - I(248) * pw(s5, 4) -
              I(464) * pw(s5, 3) * s16 * s14 * s10 + I(148) * pw(s5, 3) * s10 -
              I(1284) * s16 * pw(s5, 3) + I(4284) * pw(s16, 2) * pw(s5, 4) -
              I(20) * s5 * s14);
  r.push_back((I(-1) + I(2) * s5 * s10 - I(4) * s5 * s5 + I(6) * s5 * s16) *
              (I(2) * s5 * s10 + I(2) * s14 * s10 - I(2) * s5 * s5 -
               I(10) * s5 * s16 - I(2) * s14 * s16 + I(3)));
  r.push_back(I(96) * pw(s5, 5) * s10 + I(24) * pw(s5, 4) * pw(s10, 2) -
              I(1920) * pw(s5, 5) * s16 + I(98) * pw(s5, 2) +
              I(24) * pw(s5, 4) * s14 * s10 + I(350) * s14 * s16 * pw(s5, 2) +
              I(34) * pw(s5, 2) * s14 * s10 + I(264) * pw(s5, 4) * s16 * s14 -
              I(1524) * pw(s5, 3) * pw(s16, 2) * s14 +
              I(12) * pw(s5, 3) * s14 * pw(s10, 2) + I(240) * pw(s5, 6) -
              I(576) * pw(s5, 4) * s10 * s16 + s14 * s14 +
              I(102) * pw(s5, 2) * pw(s16, 2) * s14 * s14 -
              I(20) * s5 * s16 * s14 * s14 +
              I(36) * pw(s5, 2) * s14 * s14 * s10 * s16 -
              I(4) * s5 * s14 * s14 * s10 - I(24) * pw(s5, 3) * s14 +
              I(6) * pw(s5, 2) * s14 * s14 * pw(s10, 2) + I(240) * pw(s5, 4) -
              I(216) * pw(s5, 3) * s16 * s14 * s10 + I(72) * pw(s5, 3) * s10 -
              I(1488) * s16 * pw(s5, 3) + I(5688) * pw(s16, 2) * pw(s5, 4) -
              I(20) * s5 * s14);
  r.push_back(-s5 + I(6) * s16 * s5 * s5 + I(2) * s5 * s5 * s10 -
              I(4) * pw(s5, 3));
  r.push_back(I(2) * s5 * s5 * s10 - I(2) * s16 * s5 * s5 + s5 -
              s5 * s16 * s14 + s5 * s14 * s10 - I(12) * pw(s5, 3));
  r.push_back(I(10) * s5 * s16 * s14 + I(2) * s5 * s14 * s10 + I(11) * s5 -
              s14 + I(8) * pw(s5, 3) - I(82) * s16 * s5 * s5 +
              I(6) * s5 * s5 * s10);
  return r;
}

}  // namespace lbq
