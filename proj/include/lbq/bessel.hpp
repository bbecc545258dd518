#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbq {

namespace detail {

// ascending series, reliable for moderate arguments
inline double bessel_j_series(double nu, double x) {
  double half = 0.5 * x;
  double term = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -half * half / (k * (k + nu));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Miller backward recurrence for integer orders at large argument
inline double bessel_j_miller(int nu, double x) {
  int start = 2 * ((int)(std::max((double)nu, x) + 20) / 2 + 10);
  double jp = 0.0, jc = 1e-30, target = 0.0, even_sum = 0.0;
  for (int k = start; k >= 0; --k) {
    double jm = 2.0 * (k + 1) / x * jc - jp;
    jp = jc;
    jc = jm;
    if (k % 2 == 0) even_sum += (k == 0 ? jc : 2.0 * jc);
    if (k == nu) target = jc;
    if (std::abs(jc) > 1e250) {
      jc *= 1e-250; jp *= 1e-250; even_sum *= 1e-250; target *= 1e-250;
    }
  }
  return target / even_sum;
}

// half-integer orders by upward recurrence from the trigonometric forms
inline double bessel_j_half(int twice_nu, double x) {
  double pref = std::sqrt(2.0 / (M_PI * x));
  double jm = pref * std::cos(x);   // J_{-1/2}
  double jc = pref * std::sin(x);   // J_{+1/2}
  int steps = (twice_nu - 1) / 2;
  double nu = 0.5;
  for (int k = 0; k < steps; ++k) {
    double jn = 2.0 * nu / x * jc - jm;
    jm = jc;
    jc = jn;
    nu += 1.0;
  }
  return jc;
}

}  // namespace detail

/// Bessel function of the first kind for integer and half-integer order
/// (order encoded as its exact double value: 0, 0.5, 1, 1.5, ...).
inline double bessel_j(double order, double x) {
  if (order < 0 || order > 50)
    throw std::invalid_argument("bessel_j: order must lie in [0, 50]");
  int twice = (int)std::lround(2 * order);
  if (std::abs(2 * order - twice) > 1e-12)
    throw std::invalid_argument("bessel_j: order must be integer or half-integer");
  if (x < 0) return (twice % 2 == 0 && (twice / 2) % 2 == 0 ? 1 : -1) * bessel_j(order, -x);
  if (x == 0) return order == 0 ? 1.0 : 0.0;
  if (twice % 2 == 1 && x >= 1e-3) return detail::bessel_j_half(twice, x);
  if (x < 12.0 || x < order) return detail::bessel_j_series(order, x);
  return detail::bessel_j_miller(twice / 2, x);
}

/// n-th positive zero of J_order, to better than 1e-12.
inline double bessel_zero(double order, int n) {
  if (n < 1) throw std::invalid_argument("bessel_zero: n must be >= 1");
  if (order < 0 || order > 50)
    throw std::invalid_argument("bessel_zero: order must lie in [0, 50]");
  // half-integer order 1/2: zeros are exactly n*pi
  if (std::abs(order - 0.5) < 1e-12) return n * M_PI;
  double x = std::max(order > 0 ? order : 0.5, 1e-3);
  double fx = bessel_j(order, x);
  int found = 0;
  const double step = 0.05;
  for (int it = 0; it < 2000000; ++it) {
    double x2 = x + step;
    double f2 = bessel_j(order, x2);
    if ((fx < 0) != (f2 < 0) || f2 == 0.0) {
      ++found;
      if (found == n) {
        double a = x, b = x2;
        for (int k = 0; k < 200; ++k) {
          double mid = 0.5 * (a + b);
          double fm = bessel_j(order, mid);
          if ((fm < 0) == (fx < 0)) { a = mid; } else { b = mid; }
          if (b - a < 1e-14) break;
        }
        return 0.5 * (a + b);
      }
    }
    x = x2;
    fx = f2;
  }
  throw std::runtime_error("bessel_zero: zero " + std::to_string(n) +
                           " of order " + std::to_string(order) + " not found");
}

enum class ModeProblem { heat_disk, heat_sphere, stokes_disk, stokes_sphere };

struct ModeReference {
  ModeProblem problem;
  int ell = 0;
  int n = 1;
  double radius = 0.0;
  double coefficient = 0.0;  // kappa or nu, supplied by the caller
  double gamma = 0.0;
};

/// Analytical decay rate of mode (ell, n) of the heat/Stokes problem in a
/// disk or sphere of radius R: gamma = coeff * (zero / R)^2, where the
/// relevant zero is of J_ell (disk) or J_{ell+1/2} (sphere).
inline ModeReference gamma_reference(ModeProblem problem, int ell, int n,
                                     double radius, double coefficient) {
  if (radius <= 0) throw std::invalid_argument("gamma_reference: radius must be positive");
  if (n < 1) throw std::invalid_argument("gamma_reference: n must be >= 1");
  if (ell < 0) throw std::invalid_argument("gamma_reference: ell must be >= 0");
  if (problem == ModeProblem::stokes_sphere && ell < 1)
    throw std::invalid_argument(
        "gamma_reference: the spherical flow problem has no ell = 0 mode");
  double order = (problem == ModeProblem::heat_sphere ||
                  problem == ModeProblem::stokes_sphere)
                     ? ell + 0.5
                     : (double)ell;
  double zero = bessel_zero(order, n);
  ModeReference r{problem, ell, n, radius, coefficient,
                  coefficient * (zero / radius) * (zero / radius)};
  return r;
}

}  // namespace lbq
