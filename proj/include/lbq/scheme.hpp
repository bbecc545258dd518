#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "lbq/matrix.hpp"
#include "lbq/scalar.hpp"

namespace lbq {

/// A moment-space lattice scheme: velocity set, lattice speed and the moment matrix
/// with its cached inverse. Immutable after construction.
template <class T>
struct SchemeDefinition {
  std::string name;
  int dim = 0;
  int velocity_count = 0;  // J + 1
  T lambda = T(1);
  std::vector<std::array<int, 3>> velocities;  // integer stencil, scaled by lambda
  Matrix<T> moment_matrix;
  Matrix<T> moment_inverse;
  std::vector<std::string> moment_names;

  int last_index() const { return velocity_count - 1; }  // J

  /// Index of the velocity opposite to j.
  int opposite(int j) const {
    for (int l = 0; l < velocity_count; ++l)
      if (velocities[l][0] == -velocities[j][0] &&
          velocities[l][1] == -velocities[j][1] &&
          velocities[l][2] == -velocities[j][2])
        return l;
    throw std::logic_error(name + ": velocity set not reflection-invariant");
  }
};

namespace detail {

template <class T>
void finalize(SchemeDefinition<T>& s) {
  s.velocity_count = static_cast<int>(s.velocities.size());
  s.moment_inverse = inverse(s.moment_matrix, s.name + " moment matrix");
}

}  // namespace detail

template <class T>
SchemeDefinition<T> make_d1q3(T lambda = T(1)) {
  SchemeDefinition<T> s;
  s.name = "d1q3";
  s.dim = 1;
  s.lambda = lambda;
  s.velocities = {{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}};
  s.moment_names = {"density", "momentum", "energy"};
  Matrix<T> m(3, 3);
  const T half = ScalarOps<T>::from_ratio(1, 2);
  // columns ordered as the velocities {0, +lambda, -lambda}
  for (int j = 0; j < 3; ++j) m(0, j) = T(1);
  m(1, 0) = T(0);
  m(1, 1) = lambda;
  m(1, 2) = -lambda;
  m(2, 0) = T(0);
  m(2, 1) = half * lambda * lambda;
  m(2, 2) = half * lambda * lambda;
  s.moment_matrix = m;
  detail::finalize(s);
  return s;
}

template <class T>
SchemeDefinition<T> make_d2q5(T lambda = T(1)) {
  SchemeDefinition<T> s;
  s.name = "d2q5";
  s.dim = 2;
  s.lambda = lambda;
  s.velocities = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  s.moment_names = {"density", "momentum_x", "momentum_y", "energy", "xx"};
  Matrix<T> m(5, 5);
  const int energy_row[5] = {-4, 1, 1, 1, 1};
  const int xx_row[5] = {0, 1, -1, 1, -1};
  for (int j = 0; j < 5; ++j) {
    m(0, j) = T(1);
    m(1, j) = ScalarOps<T>::from_int(s.velocities[j][0]) * lambda;
    m(2, j) = ScalarOps<T>::from_int(s.velocities[j][1]) * lambda;
    m(3, j) = ScalarOps<T>::from_int(energy_row[j]);
    m(4, j) = ScalarOps<T>::from_int(xx_row[j]);
  }
  s.moment_matrix = m;
  detail::finalize(s);
  return s;
}

template <class T>
SchemeDefinition<T> make_d2q9(T lambda = T(1)) {
  SchemeDefinition<T> s;
  s.name = "d2q9";
  s.dim = 2;
  s.lambda = lambda;
  s.velocities = {{0, 0, 0},  {1, 0, 0},  {0, 1, 0},   {-1, 0, 0}, {0, -1, 0},
                  {1, 1, 0},  {-1, 1, 0}, {-1, -1, 0}, {1, -1, 0}};
  s.moment_names = {"density",     "momentum_x",  "momentum_y",
                    "energy",      "energy_square", "heat_flux_x",
                    "heat_flux_y", "stress_xx",   "stress_xy"};
  const int rows[7][9] = {
      {-4, -1, -1, -1, -1, 2, 2, 2, 2},   // energy
      {4, -2, -2, -2, -2, 1, 1, 1, 1},    // energy square
      {0, -2, 0, 2, 0, 1, -1, -1, 1},     // heat flux x
      {0, 0, -2, 0, 2, 1, 1, -1, -1},     // heat flux y
      {0, 1, -1, 1, -1, 0, 0, 0, 0},      // xx
      {0, 0, 0, 0, 0, 1, -1, 1, -1},      // xy
      {0, 0, 0, 0, 0, 0, 0, 0, 0}};
  Matrix<T> m(9, 9);
  for (int j = 0; j < 9; ++j) {
    m(0, j) = T(1);
    m(1, j) = ScalarOps<T>::from_int(s.velocities[j][0]) * lambda;
    m(2, j) = ScalarOps<T>::from_int(s.velocities[j][1]) * lambda;
    for (int r = 0; r < 6; ++r)
      m(3 + r, j) = ScalarOps<T>::from_int(rows[r][j]);
  }
  s.moment_matrix = m;
  detail::finalize(s);
  return s;
}

template <class T>
SchemeDefinition<T> make_d3q7(T lambda = T(1)) {
  SchemeDefinition<T> s;
  s.name = "d3q7";
  s.dim = 3;
  s.lambda = lambda;
  s.velocities = {{0, 0, 0},  {1, 0, 0},  {0, 1, 0}, {0, 0, 1},
                  {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  s.moment_names = {"density",   "momentum_x", "momentum_y", "momentum_z",
                    "tensor_zz", "tensor_ww",  "energy"};
  const int rows[3][7] = {
      {0, -1, -1, 2, -1, -1, 2},  // 2zz - xx - yy
      {0, 1, -1, 0, 1, -1, 0},    // xx - yy
      {-6, 1, 1, 1, 1, 1, 1}};    // energy
  Matrix<T> m(7, 7);
  for (int j = 0; j < 7; ++j) {
    m(0, j) = T(1);
    for (int a = 0; a < 3; ++a)
      m(1 + a, j) = ScalarOps<T>::from_int(s.velocities[j][a]) * lambda;
    for (int r = 0; r < 3; ++r)
      m(4 + r, j) = ScalarOps<T>::from_int(rows[r][j]);
  }
  s.moment_matrix = m;
  detail::finalize(s);
  return s;
}

/// D3Q19: rows 0..3 are density and momentum; rows 4..18 start from the
/// raw kinetic moments (kinetic energy, second-order tensors, heat flux,
/// energy square, weighted second-order, third-order antisymmetric) and
/// are then orthogonalized against all earlier rows, Gram-Schmidt style,
/// under the uniform inner product sum_j M_ij M_kj.
template <class T>
SchemeDefinition<T> make_d3q19(T lambda = T(1)) {
  SchemeDefinition<T> s;
  s.name = "d3q19";
  s.dim = 3;
  s.lambda = lambda;
  s.velocities = {{0, 0, 0},   {1, 0, 0},  {0, 1, 0},   {0, 0, 1},
                  {-1, 0, 0},  {0, -1, 0}, {0, 0, -1},  {1, 1, 0},
                  {1, -1, 0},  {-1, 1, 0}, {-1, -1, 0}, {0, 1, 1},
                  {0, -1, 1},  {0, 1, -1}, {0, -1, -1}, {1, 0, 1},
                  {1, 0, -1},  {-1, 0, 1}, {-1, 0, -1}};
  s.moment_names = {"density",        "momentum_x",     "momentum_y",
                    "momentum_z",     "energy",         "stress_xx",
                    "stress_ww",      "stress_xy",      "stress_yz",
                    "stress_zx",      "energy_flux_x",  "energy_flux_y",
                    "energy_flux_z",  "energy_square",  "weighted_xx",
                    "weighted_ww",    "third_x",        "third_y",
                    "third_z"};
  const int n = 19;
  Matrix<T> m(n, n);
  auto vel = [&](int j, int a) {
    return T(ScalarOps<T>::from_int(s.velocities[j][a]) * lambda);
  };
  for (int j = 0; j < n; ++j) {
    m(0, j) = T(1);
    for (int a = 0; a < 3; ++a) m(1 + a, j) = vel(j, a);
    T vx = vel(j, 0), vy = vel(j, 1), vz = vel(j, 2);
    T v2 = vx * vx + vy * vy + vz * vz;
    m(4, j) = ScalarOps<T>::from_int(19) * v2;
    m(5, j) = T(2) * vx * vx - vy * vy - vz * vz;
    m(6, j) = vy * vy - vz * vz;
    m(7, j) = vx * vy;
    m(8, j) = vy * vz;
    m(9, j) = vz * vx;
    m(10, j) = T(5) * vx * v2;
    m(11, j) = T(5) * vy * v2;
    m(12, j) = T(5) * vz * v2;
    m(13, j) = ScalarOps<T>::from_ratio(21, 2) * v2 * v2;
    m(14, j) = T(3) * (T(2) * vx * vx - vy * vy - vz * vz) * v2;
    m(15, j) = T(3) * (vy * vy - vz * vz) * v2;
    m(16, j) = vx * (vy * vy - vz * vz);
    m(17, j) = vy * (vz * vz - vx * vx);
    m(18, j) = vz * (vx * vx - vy * vy);
  }
  // Orthogonalize rows 4..18 against every earlier row.
  for (int i = 4; i < n; ++i) {
    for (int l = 0; l < i; ++l) {
      T dot(0), norm(0);
      for (int j = 0; j < n; ++j) {
        dot += m(i, j) * m(l, j);
        norm += m(l, j) * m(l, j);
      }
      if (ScalarOps<T>::is_zero(norm))
        throw std::logic_error("d3q19: rank loss during orthogonalization");
      if (ScalarOps<T>::is_zero(dot)) continue;
      T g = dot / norm;
      for (int j = 0; j < n; ++j) m(i, j) = m(i, j) - g * m(l, j);
    }
    T norm(0);
    for (int j = 0; j < n; ++j) norm += m(i, j) * m(i, j);
    if (ScalarOps<T>::is_zero(norm))
      throw std::logic_error("d3q19: rank loss during orthogonalization");
  }
  s.moment_matrix = m;
  detail::finalize(s);
  return s;
}

template <class T>
SchemeDefinition<T> make_scheme(const std::string& name, T lambda = T(1)) {
  if (name == "d1q3") return make_d1q3<T>(lambda);
  if (name == "d2q5") return make_d2q5<T>(lambda);
  if (name == "d2q9") return make_d2q9<T>(lambda);
  if (name == "d3q7") return make_d3q7<T>(lambda);
  if (name == "d3q19") return make_d3q19<T>(lambda);
  throw std::invalid_argument("unknown scheme: " + name);
}

}  // namespace lbq
