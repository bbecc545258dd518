#pragma once

#include <map>
#include <vector>

#include "lbq/matrix.hpp"
#include "lbq/multi_index.hpp"
#include "lbq/scalar.hpp"

namespace lbq {

/// Momentum-velocity tensor Lambda[k][p][l] = sum_j M_kj M_pj Minv_jl,
/// symmetric in (k, p).
template <class T>
class LambdaTensor {
 public:
  LambdaTensor(std::size_t n) : n_(n), data_(n * n * n, T(0)) {}

  std::size_t size() const { return n_; }
  T& at(std::size_t k, std::size_t p, std::size_t l) {
    return data_[(k * n_ + p) * n_ + l];
  }
  const T& at(std::size_t k, std::size_t p, std::size_t l) const {
    return data_[(k * n_ + p) * n_ + l];
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

template <class T>
LambdaTensor<T> build_lambda(const Matrix<T>& m, const Matrix<T>& minv) {
  const std::size_t n = m.rows();
  LambdaTensor<T> lam(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = k; p < n; ++p)
      for (std::size_t l = 0; l < n; ++l) {
        T acc(0);
        for (std::size_t j = 0; j < n; ++j)
          acc += m(k, j) * m(p, j) * minv(j, l);
        lam.at(k, p, l) = acc;
        lam.at(p, k, l) = acc;
      }
  return lam;
}

template <class T>
LambdaTensor<T> build_lambda(const Matrix<T>& m) {
  return build_lambda(m, inverse(m, "moment matrix"));
}

/// Coefficients P_{l,gamma} of the multinomial expansion
///   (-sum_alpha c_alpha d_alpha)^q = sum_{|gamma|=q} P_{l,gamma} d_gamma,
/// where c_alpha is the velocity row of population l. q = 0 yields the
/// empty multi-index with coefficient 1.
template <class T>
std::map<MultiIndex, T> p_coefficients(const std::vector<T>& velocity_row,
                                       int q) {
  const int d = static_cast<int>(velocity_row.size());
  std::map<MultiIndex, T> out;
  for (const MultiIndex& gamma : multi_indices_of_length(d, q)) {
    T coeff = ScalarOps<T>::from_int(multinomial(gamma));
    if (q % 2 != 0) coeff = -coeff;
    for (int a = 0; a < d; ++a)
      for (int e = 0; e < gamma[a]; ++e) coeff *= velocity_row[a];
    out.emplace(gamma, std::move(coeff));
  }
  return out;
}

}  // namespace lbq
