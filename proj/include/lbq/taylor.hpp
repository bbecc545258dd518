#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lbq/collision.hpp"
#include "lbq/matrix.hpp"
#include "lbq/moment_algebra.hpp"
#include "lbq/multi_index.hpp"
#include "lbq/scalar.hpp"

namespace lbq {

/// Result of the multi-order expansion of a relaxation scheme: for each
/// spatial multi-index gamma, the conservation-law coefficients A^gamma
/// (nonzero on the conserved N x N block) and the moment-representation
/// coefficients B^gamma (rows k >= N, columns j < N). B at gamma = 0 is
/// extended with an identity block on the conserved rows; this makes the
/// recurrences below uniform in the r-sums.
template <class T>
struct EquivalentExpansion {
  int order = 0;
  int conserved = 0;
  int size = 0;  // J + 1
  int dim = 0;
  std::map<MultiIndex, Matrix<T>> a;
  std::map<MultiIndex, Matrix<T>> b;
  // workspace kept when audit mode is requested
  bool audited = false;
  std::map<std::pair<int, MultiIndex>, Matrix<T>> c;
  std::map<std::pair<int, MultiIndex>, Matrix<T>> d;

  const Matrix<T>& a_at(const MultiIndex& gamma) const {
    auto it = a.find(gamma);
    if (it == a.end())
      throw std::out_of_range("no conservation coefficient for " + gamma.str());
    return it->second;
  }
  const Matrix<T>& b_at(const MultiIndex& gamma) const {
    auto it = b.find(gamma);
    if (it == b.end())
      throw std::out_of_range("no moment coefficient for " + gamma.str());
    return it->second;
  }
};

/// One term of the equivalent equation for a conserved quantity:
///   d_t W_i + sum Delta_t^{dt_power} coefficient d_gamma W_j = higher order.
template <class T>
struct PdeTerm {
  MultiIndex gamma;
  int j = 0;
  int dt_power = 0;  // |gamma| - 1
  T coefficient{};
};

/// Expands the scheme to the requested order by the coupled recurrences:
/// per order, the time-derivative compositions C are extended, then A,
/// then the moment compositions D, then B.
template <class T>
EquivalentExpansion<T> expand(const CollisionModel<T>& model, int order,
                              bool audit = false) {
  if (order < 1 || order > 6)
    throw std::invalid_argument("expansion order must lie in 1..6");
  const int n = model.velocity_count();
  const int nc = model.conserved;
  const int dim = model.scheme.dim;
  const Matrix<T>& mom = model.scheme.moment_matrix;
  const Matrix<T>& psi = model.psi;
  for (int k = nc; k < n; ++k)
    if (ScalarOps<T>::is_zero(model.rates[k]))
      throw std::invalid_argument(
          model.kind + ": relaxed moment '" + model.scheme.moment_names[k] +
          "' has zero rate, representation of nonconserved moments undefined");

  EquivalentExpansion<T> out;
  out.order = order;
  out.conserved = nc;
  out.size = n;
  out.dim = dim;
  out.audited = audit;

  // Q_{l r} = (M^-1 Psi)_{l r}; velocity row l against moment column r.
  const Matrix<T> q = model.scheme.moment_inverse * psi;

  // E[delta]_{k r} = sum_l M_{k l} P_{l delta} Q_{l r}: the contraction of
  // the streaming shift at multi-index delta with the collision.
  std::map<MultiIndex, Matrix<T>> shift;
  {
    std::vector<std::map<MultiIndex, T>> p(n);
    for (int g = 1; g <= order; ++g) {
      for (int l = 0; l < n; ++l) {
        std::vector<T> vel(dim);
        for (int a = 0; a < dim; ++a)
          vel[a] = ScalarOps<T>::from_int(model.scheme.velocities[l][a]) *
                   model.scheme.lambda;
        auto pl = p_coefficients(vel, g);
        for (auto& kv : pl) p[l][kv.first] = kv.second;
      }
      for (const MultiIndex& delta : multi_indices_of_length(dim, g)) {
        Matrix<T> e(n, n);
        for (int l = 0; l < n; ++l) {
          auto it = p[l].find(delta);
          if (it == p[l].end() || ScalarOps<T>::is_zero(it->second)) continue;
          for (int k = 0; k < n; ++k) {
            if (ScalarOps<T>::is_zero(mom(k, l))) continue;
            const T w = mom(k, l) * it->second;
            for (int r = 0; r < n; ++r) e(k, r) += w * q(l, r);
          }
        }
        shift.emplace(delta, std::move(e));
      }
    }
  }

  // Extended zeroth-order representation: conserved rows identity,
  // relaxed rows Psi_kj / s_k.
  const MultiIndex zero(dim);
  {
    Matrix<T> b0(n, n);
    for (int k = 0; k < nc; ++k) b0(k, k) = T(1);
    for (int k = nc; k < n; ++k)
      for (int j = 0; j < nc; ++j)
        if (!ScalarOps<T>::is_zero(psi(k, j)))
          b0(k, j) = psi(k, j) / model.rates[k];
    out.b.emplace(zero, std::move(b0));
  }

  std::map<std::pair<int, MultiIndex>, Matrix<T>> cw;  // C^{q,gamma}, q >= 2
  std::map<std::pair<int, MultiIndex>, Matrix<T>> dw;  // D^{q,gamma}, q >= 1

  auto c_at = [&](int q, const MultiIndex& g) -> const Matrix<T>& {
    return q == 1 ? out.a.at(g) : cw.at({q, g});
  };
  auto d_at = [&](int q, const MultiIndex& g) -> const Matrix<T>& {
    return q == 0 ? out.b.at(g) : dw.at({q, g});
  };

  for (int g = 1; g <= order; ++g) {
    for (const MultiIndex& gamma : multi_indices_of_length(dim, g)) {
      const auto split = downset(gamma);

      // time-derivative compositions at this gamma
      for (int qd = 2; qd <= g; ++qd) {
        Matrix<T> acc(n, n);
        for (const MultiIndex& delta : split) {
          const MultiIndex eps = gamma - delta;
          if (delta.length() < qd - 1 || eps.length() < 1) continue;
          acc -= c_at(qd - 1, delta) * out.a.at(eps);
        }
        cw.emplace(std::make_pair(qd, gamma), std::move(acc));
      }

      // shared collision-shift sum: sum over delta+eps=gamma, |delta|>=1,
      // of (1/|delta|!) E[delta] B^eps
      Matrix<T> shared(n, n);
      for (const MultiIndex& delta : split) {
        if (delta.length() < 1) continue;
        const MultiIndex eps = gamma - delta;
        Matrix<T> term = shift.at(delta) * out.b.at(eps);
        const T f = ScalarOps<T>::from_ratio(1, factorial(delta.length()));
        for (int r = 0; r < n; ++r)
          for (int cidx = 0; cidx < n; ++cidx)
            shared(r, cidx) += f * term(r, cidx);
      }

      // conservation-law coefficients
      Matrix<T> amat(n, n);
      for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j) {
          T v = -shared(i, j);
          for (int qd = 2; qd <= g; ++qd)
            v -= ScalarOps<T>::from_ratio(1, factorial(qd)) *
                 cw.at({qd, gamma})(i, j);
          amat(i, j) = std::move(v);
        }
      out.a.emplace(gamma, std::move(amat));

      // moment compositions at this gamma (need A^gamma, computed above)
      for (int qd = 1; qd <= g; ++qd) {
        Matrix<T> acc(n, n);
        for (const MultiIndex& delta : split) {
          const MultiIndex eps = gamma - delta;
          if (delta.length() < qd - 1 || eps.length() < 1) continue;
          acc -= d_at(qd - 1, delta) * out.a.at(eps);
        }
        dw.emplace(std::make_pair(qd, gamma), std::move(acc));
      }

      // representation coefficients for the relaxed moments
      Matrix<T> bmat(n, n);
      for (int k = nc; k < n; ++k)
        for (int j = 0; j < nc; ++j) {
          T v = shared(k, j);
          for (int qd = 1; qd <= g; ++qd)
            v -= ScalarOps<T>::from_ratio(1, factorial(qd)) *
                 dw.at({qd, gamma})(k, j);
          bmat(k, j) = v / model.rates[k];
        }
      out.b.emplace(gamma, std::move(bmat));
    }
  }

  if (audit) {
    out.c = std::move(cw);
    out.d = std::move(dw);
  }
  return out;
}

/// Flattens the equivalent equation for conserved index i into a
/// deterministic term list: d_t W_i + sum_terms Delta_t^p coeff d_gamma W_j
/// = O(Delta_t^order). Zero coefficients are kept out of the list.
template <class T>
std::vector<PdeTerm<T>> pde_report(const EquivalentExpansion<T>& exp, int i) {
  if (i < 0 || i >= exp.conserved)
    throw std::out_of_range("conserved index " + std::to_string(i) +
                            " out of range (N = " +
                            std::to_string(exp.conserved) + ")");
  std::vector<PdeTerm<T>> out;
  for (const auto& kv : exp.a) {
    for (int j = 0; j < exp.conserved; ++j) {
      const T& v = kv.second(i, j);
      if (ScalarOps<T>::is_zero(v)) continue;
      PdeTerm<T> t;
      t.gamma = kv.first;
      t.j = j;
      t.dt_power = kv.first.length() - 1;
      t.coefficient = v;
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace lbq
