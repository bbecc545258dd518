#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "lbq/bessel.hpp"
#include "lbq/collision.hpp"
#include "lbq/dispersion.hpp"

using namespace lbq;

static CollisionModel<double> heat5() {
  return make_thermal_d2q5(make_d2q5<double>(1.0), 0.5, 1.2, 1.1, 1.3);
}

TEST_CASE("zero wave vector reduces to the bare collision spectrum") {
  auto am = amplification(heat5(), {0.0, 0.0});
  auto zs = spectrum(am);
  // eigenvalues: 1 (conserved) and 1 - s_k for the relaxed moments
  std::vector<double> expect = {1.0, 1.0 - 1.2, 1.0 - 1.2, 1.0 - 1.1,
                                1.0 - 1.3};
  std::sort(expect.begin(), expect.end());
  std::vector<double> got;
  for (auto z : zs) {
    CHECK(std::abs(z.imag()) < 1e-14);
    got.push_back(z.real());
  }
  std::sort(got.begin(), got.end());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("half-turn phases at the zone edge") {
  auto am = amplification(heat5(), {M_PI, 0.0});
  // streaming phase of the +x velocity is exp(i pi) = -1; the matrix must
  // be real at this k
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(std::abs(am.g(i, j).imag()) < 1e-14);
}

TEST_CASE("opposite wave vectors give conjugate amplification") {
  std::vector<double> k = {0.37, -0.21};
  auto ap = amplification(heat5(), k);
  auto an = amplification(heat5(), {-k[0], -k[1]});
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(std::abs(ap.g(i, j) - std::conj(an.g(i, j))) < 1e-14);
}

TEST_CASE("wave vectors outside the Brillouin zone are rejected") {
  CHECK_THROWS_AS(amplification(heat5(), {3.5, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(amplification(heat5(), {0.1, 0.1, 0.1}),
                  std::invalid_argument);
}

TEST_CASE("measured decay rate matches the diffusive prediction at small k") {
  double kappa = (1.0 / 1.2 - 0.5) * 4.5 / 10.0;
  double k = 2.0 * M_PI / 64.0;
  auto am = amplification(heat5(), {k, 0.0});
  auto mr = measured_rate(am, kappa * k * k);
  CHECK(!mr.oscillatory);
  CHECK(mr.relative_error < 1e-3);
  CHECK(mr.gamma_num == doctest::Approx(kappa * k * k).epsilon(1e-3));
}

TEST_CASE("log-log slope fit recovers synthetic power laws") {
  std::vector<std::pair<double, double>> quad, quart;
  for (double k : {0.05, 0.1, 0.2, 0.4}) {
    quad.push_back({k, 3.0 * k * k});
    quart.push_back({k, 0.7 * k * k * k * k});
  }
  CHECK(order_fit(quad) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(order_fit(quart) == doctest::Approx(4.0).epsilon(1e-12));
  quad.resize(3);
  CHECK_THROWS_AS(order_fit(quad), std::invalid_argument);
  std::vector<std::pair<double, double>> bad = {
      {0.1, 1.0}, {0.2, -1.0}, {0.3, 1.0}, {0.4, 1.0}};
  CHECK_THROWS_AS(order_fit(bad), std::invalid_argument);
}

TEST_CASE("cylinder-function zeros: quoted values and classical structure") {
  CHECK(bessel_zero(0.0, 1) == doctest::Approx(2.404825557695773).epsilon(1e-12));
  // half-integer zeros are exactly multiples of pi
  for (int n = 1; n <= 8; ++n)
    CHECK(bessel_zero(0.5, n) == doctest::Approx(n * M_PI).epsilon(1e-14));
  // zeros increase with n and interlace between consecutive orders
  for (int n = 1; n <= 9; ++n) {
    CHECK(bessel_zero(1.0, n) < bessel_zero(1.0, n + 1));
    CHECK(bessel_zero(0.0, n) < bessel_zero(1.0, n));
    CHECK(bessel_zero(1.0, n) < bessel_zero(0.0, n + 1));
  }
  CHECK_THROWS_AS(bessel_zero(51.0, 1), std::invalid_argument);
}

TEST_CASE("zero-finder residuals stay below 1e-11") {
  for (double order : {0.0, 1.0, 2.0, 5.0, 0.5, 1.5, 5.5})
    for (int n = 1; n <= 10; ++n)
      CHECK(std::abs(bessel_j(order, bessel_zero(order, n))) <= 1e-11);
}

TEST_CASE("mode eigenvalue references") {
  // radial heat mode of a sphere: zeros at n pi
  double kappa = 0.08935;
  auto ref = gamma_reference(ModeProblem::heat_sphere, 0, 5, 17.2, kappa);
  CHECK(ref.gamma ==
        doctest::Approx(25.0 * M_PI * M_PI * kappa / (17.2 * 17.2))
            .epsilon(1e-13));
  // doubling the radius quarters the eigenvalue
  auto ref2 = gamma_reference(ModeProblem::heat_sphere, 0, 5, 34.4, kappa);
  CHECK(ref2.gamma == doctest::Approx(ref.gamma / 4).epsilon(1e-13));
  // the spherical momentum problem needs ell >= 1
  CHECK_THROWS_AS(gamma_reference(ModeProblem::stokes_sphere, 0, 1, 10.0, 0.1),
                  std::invalid_argument);
  CHECK(gamma_reference(ModeProblem::heat_disk, 0, 1, 10.0, 0.1).gamma > 0);
}
