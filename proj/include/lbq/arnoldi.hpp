#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace lbq {

struct EigenResult {
  std::complex<double> z;        // eigenvalue of the applied operator
  int power = 1;                 // operator = (one step)^power
  double dt = 1.0;
  double residual = 0.0;         // ||A v - z v|| / ||v||
  bool converged = false;
  bool growing = false;          // |z| > 1
  std::vector<double> mode;      // real part of the eigenvector
};

/// Decay rate implied by an eigenvalue of the power-applied step operator.
/// A growing mode (|z| > 1) yields a negative rate and is flagged by the
/// caller via EigenResult::growing.
inline double mode_rate(const EigenResult& r) {
  return -std::log(std::abs(r.z)) / (r.power * r.dt);
}

struct ArnoldiOptions {
  int krylov_size = 40;
  int n_wanted = 4;
  double tolerance = 1e-10;
  int max_restarts = 40;
  int power = 25;   // odd number of time steps per operator application
  double dt = 1.0;
  unsigned seed = 12345;
  // optional deterministic start vector (length dim); empty = seeded random.
  // Seeding with a symmetry-pure field confines the Krylov space to that
  // symmetry sector of the (translation/reflection-invariant) operator.
  std::vector<double> start;
};

/// Matrix-free Arnoldi iteration with modified Gram-Schmidt (plus one
/// reorthogonalization pass) and explicit restarts. `apply` must be a
/// linear map acting in place on a state vector of length `dim`.
inline std::vector<EigenResult> arnoldi(
    const std::function<void(std::vector<double>&)>& apply, int dim,
    const ArnoldiOptions& opt) {
  if (opt.krylov_size < opt.n_wanted + 5)
    throw std::invalid_argument(
        "arnoldi: krylov size must be at least n_wanted + 5");
  if (opt.power % 2 == 0)
    throw std::invalid_argument(
        "arnoldi: the step power must be odd (even powers alias "
        "checkerboard modes)");
  const int m = std::min(opt.krylov_size, dim);
  std::mt19937 rng(opt.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> v0(dim);
  if (!opt.start.empty()) {
    if ((int)opt.start.size() != dim)
      throw std::invalid_argument("arnoldi: start vector length mismatch");
    v0 = opt.start;
  } else {
    for (auto& x : v0) x = gauss(rng);
  }

  auto norm = [](const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
  };
  auto dot = [](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  };

  std::vector<EigenResult> results;
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    double n0 = norm(v0);
    if (!(n0 > 0)) throw std::runtime_error("arnoldi: zero start vector");
    std::vector<std::vector<double>> v(1);
    v[0] = v0;
    for (auto& x : v[0]) x /= n0;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m);
    int built = m;
    for (int k = 0; k < m; ++k) {
      std::vector<double> w = v[k];
      apply(w);
      for (double x : w)
        if (std::isnan(x)) throw std::runtime_error("arnoldi: operator returned NaN");
      for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i <= k; ++i) {
          double c = dot(v[i], w);
          h(i, k) += c;
          for (int n = 0; n < dim; ++n) w[n] -= c * v[i][n];
        }
      double hn = norm(w);
      h(k + 1, k) = hn;
      if (hn < 1e-14) {  // invariant subspace found
        built = k + 1;
        break;
      }
      for (auto& x : w) x /= hn;
      v.push_back(std::move(w));
    }
    Eigen::MatrixXd hm = h.topLeftCorner(built, built);
    Eigen::EigenSolver<Eigen::MatrixXd> es(hm);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("arnoldi: Hessenberg eigensolve failed");
    // rank Ritz values by magnitude
    std::vector<int> order(built);
    for (int i = 0; i < built; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(es.eigenvalues()(a)) > std::abs(es.eigenvalues()(b));
    });
    int want = std::min(opt.n_wanted, built);
    double hlast = built < m ? 0.0 : h(built, built - 1);
    results.clear();
    bool all_ok = true;
    for (int t = 0; t < want; ++t) {
      int i = order[t];
      EigenResult r;
      r.z = es.eigenvalues()(i);
      r.power = opt.power;
      r.dt = opt.dt;
      r.residual = std::abs(hlast * es.eigenvectors()(built - 1, i));
      r.converged = r.residual <= opt.tolerance;
      r.growing = std::abs(r.z) > 1.0 + 1e-12;
      all_ok = all_ok && r.converged;
      Eigen::VectorXcd y = es.eigenvectors().col(i);
      r.mode.assign(dim, 0.0);
      for (int kk = 0; kk < built; ++kk) {
        double c = y(kk).real();
        for (int n = 0; n < dim; ++n) r.mode[n] += c * v[kk][n];
      }
      results.push_back(std::move(r));
    }
    if (all_ok || restart == opt.max_restarts) return results;
    // explicit restart with the span of the wanted Ritz vectors
    std::fill(v0.begin(), v0.end(), 0.0);
    for (int t = 0; t < want; ++t)
      for (int n = 0; n < dim; ++n) v0[n] += results[t].mode[n];
    if (!(norm(v0) > 1e-300))
      for (auto& x : v0) x = gauss(rng);
  }
  return results;
}

}  // namespace lbq
