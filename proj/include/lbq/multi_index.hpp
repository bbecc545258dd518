#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace lbq {

/// Multi-index of spatial differentiation: exponent per space dimension,
/// dimension at most 3. Ordering is canonical: first by total length,
/// then lexicographically, so that iteration over ordered maps is
/// deterministic.
class MultiIndex {
 public:
  MultiIndex() : dim_(0), exp_{0, 0, 0} {}
  explicit MultiIndex(int dim) : dim_(dim), exp_{0, 0, 0} {}
  MultiIndex(std::initializer_list<int> exps) : dim_(0), exp_{0, 0, 0} {
    for (int e : exps) exp_[dim_++] = e;
  }

  int dim() const { return dim_; }
  int operator[](int axis) const { return exp_[axis]; }
  int& operator[](int axis) { return exp_[axis]; }

  int length() const { return exp_[0] + exp_[1] + exp_[2]; }

  MultiIndex operator+(const MultiIndex& o) const {
    MultiIndex r(dim_);
    for (int a = 0; a < dim_; ++a) r.exp_[a] = exp_[a] + o.exp_[a];
    return r;
  }

  /// Componentwise o <= *this.
  bool contains(const MultiIndex& o) const {
    for (int a = 0; a < dim_; ++a)
      if (o.exp_[a] > exp_[a]) return false;
    return true;
  }

  MultiIndex operator-(const MultiIndex& o) const {
    MultiIndex r(dim_);
    for (int a = 0; a < dim_; ++a) r.exp_[a] = exp_[a] - o.exp_[a];
    return r;
  }

  friend bool operator==(const MultiIndex& x, const MultiIndex& y) {
    return x.dim_ == y.dim_ && x.exp_ == y.exp_;
  }
  friend bool operator<(const MultiIndex& x, const MultiIndex& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.exp_ < y.exp_;
  }

  std::string str() const {
    std::string s = "(";
    for (int a = 0; a < dim_; ++a)
      s += std::to_string(exp_[a]) + (a + 1 < dim_ ? "," : "");
    return s + ")";
  }

 private:
  int dim_;
  std::array<int, 3> exp_;
};

/// All multi-indices of the given dimension and exact length, in canonical
/// order.
inline std::vector<MultiIndex> multi_indices_of_length(int dim, int length) {
  std::vector<MultiIndex> out;
  if (dim == 1) {
    MultiIndex g(1);
    g[0] = length;
    out.push_back(g);
  } else if (dim == 2) {
    for (int ax = 0; ax <= length; ++ax) {
      MultiIndex g(2);
      g[0] = ax;
      g[1] = length - ax;
      out.push_back(g);
    }
  } else {
    for (int ax = 0; ax <= length; ++ax)
      for (int ay = 0; ay <= length - ax; ++ay) {
        MultiIndex g(3);
        g[0] = ax;
        g[1] = ay;
        g[2] = length - ax - ay;
        out.push_back(g);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The downset of gamma: every delta with delta <= gamma componentwise
/// (including the zero index and gamma itself). Splittings delta+eps=gamma
/// are enumerated by iterating this set and taking eps = gamma - delta.
inline std::vector<MultiIndex> downset(const MultiIndex& gamma) {
  std::vector<MultiIndex> out;
  const int d = gamma.dim();
  MultiIndex delta(d);
  for (int a0 = 0; a0 <= gamma[0]; ++a0) {
    delta[0] = a0;
    if (d == 1) {
      out.push_back(delta);
      continue;
    }
    for (int a1 = 0; a1 <= gamma[1]; ++a1) {
      delta[1] = a1;
      if (d == 2) {
        out.push_back(delta);
        continue;
      }
      for (int a2 = 0; a2 <= gamma[2]; ++a2) {
        delta[2] = a2;
        out.push_back(delta);
      }
    }
  }
  return out;
}

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// |gamma|! / (gamma_1! ... gamma_d!)
inline std::int64_t multinomial(const MultiIndex& gamma) {
  std::int64_t r = factorial(gamma.length());
  for (int a = 0; a < gamma.dim(); ++a) r /= factorial(gamma[a]);
  return r;
}

}  // namespace lbq
