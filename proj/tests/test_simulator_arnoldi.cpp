#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lbq/arnoldi.hpp"
#include "lbq/collision.hpp"
#include "lbq/dispersion.hpp"
#include "lbq/mode_fit.hpp"
#include "lbq/simulator.hpp"

using namespace lbq;

static CollisionModel<double> heat5() {
  return make_thermal_d2q5(make_d2q5<double>(1.0), 0.5, 1.2, 1.1, 1.3);
}

TEST_CASE("axis link of an on-node-centered disk is cut at q = 1/2") {
  // center on a node, R = 2.5: the +x link leaving the node at radius 2
  // crosses the circle halfway
  auto g = make_disk(9, 9, 2.5, 0.0, 0.0);
  auto links = build_boundary_links(g, heat5().scheme);
  REQUIRE(!links.empty());
  bool found = false;
  for (const auto& l : links) {
    int x = l.node % 9, y = (l.node / 9) % 9;
    auto v = heat5().scheme.velocities[l.out];
    if (x == 6 && y == 4 && v[0] == 1 && v[1] == 0) {
      CHECK(l.q == doctest::Approx(0.5).epsilon(1e-14));
      found = true;
    }
    CHECK(l.q > 0.0);
    CHECK(l.q <= 1.0);
  }
  CHECK(found);
}

TEST_CASE("generic radius keeps every cut fraction strictly inside (0,1)") {
  auto g = make_disk(61, 61, 28.0);
  auto links = build_boundary_links(g, heat5().scheme);
  CHECK(!links.empty());
  for (const auto& l : links) {
    CHECK(l.q > 0.0);
    CHECK(l.q < 1.0);
  }
}

TEST_CASE("half-link first-order walls reduce to plain reflection") {
  auto model = heat5();
  auto g = make_disk(9, 9, 2.5, 0.0, 0.0);
  // node (6,4) loses its +x population; with q = 1/2 and order 1 the
  // reconstruction is wall_sign * post-collision outgoing value on site
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (auto kind : {BoundaryRule::Kind::bounce_back,
                    BoundaryRule::Kind::anti_bounce_back}) {
    Simulator sim(model, g, {kind, 1});
    for (int n = 0; n < g.node_count(); ++n) {
      if (!g.fluid[n]) continue;
      for (int j = 0; j < 5; ++j) sim.population(n, j) = u(rng);
    }
    int node = g.index(6, 4, 0);
    // compute the post-collision state of that node by hand
    std::vector<double> m(5, 0.0), fstar(5, 0.0);
    const auto& M = model.scheme.moment_matrix;
    const auto& Minv = model.scheme.moment_inverse;
    std::vector<double> mpost(5, 0.0);
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 5; ++j) m[k] += M(k, j) * sim.population(node, j);
    for (int k = 0; k < 5; ++k)
      for (int l = 0; l < 5; ++l) mpost[k] += model.psi(k, l) * m[l];
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) fstar[j] += Minv(j, k) * mpost[k];
    int out = -1, back = -1;
    for (int j = 0; j < 5; ++j) {
      auto v = model.scheme.velocities[j];
      if (v[0] == 1 && v[1] == 0) out = j;
      if (v[0] == -1 && v[1] == 0) back = j;
    }
    double wall = kind == BoundaryRule::Kind::anti_bounce_back ? -1.0 : 1.0;
    sim.step();
    CHECK(sim.population(node, back) ==
          doctest::Approx(wall * fstar[out]).epsilon(1e-13));
  }
}

TEST_CASE("uniform equilibrium is a fixed point") {
  auto model = heat5();
  auto g = make_periodic(2, 12, 12);
  Simulator sim(model, g, {});
  for (int n = 0; n < g.node_count(); ++n) sim.set_equilibrium(n, {0.7});
  std::vector<double> before;
  for (int j = 0; j < 5; ++j) before.push_back(sim.population(0, j));
  for (int t = 0; t < 20; ++t) sim.step();
  for (int n = 0; n < g.node_count(); ++n)
    for (int j = 0; j < 5; ++j)
      CHECK(sim.population(n, j) == doctest::Approx(before[j]).epsilon(1e-14));
}

TEST_CASE("a unit rate projects the relaxed moments onto equilibrium") {
  auto model = make_fluid_d1q3(make_d1q3<double>(1.0), 0.4, 1.0);  // sigma = 1/2
  auto g = make_periodic(1, 16);
  Simulator sim(model, g, {});
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 1.0);
  for (int n = 0; n < g.node_count(); ++n)
    for (int j = 0; j < 3; ++j) sim.population(n, j) = u(rng);
  // a unit rate replaces the energy moment by its equilibrium before
  // streaming, so the step equals streaming the equilibrium state
  const auto& M = model.scheme.moment_matrix;
  const auto& Minv = model.scheme.moment_inverse;
  std::vector<double> expected(16 * 3);
  for (int n = 0; n < 16; ++n) {
    double mm[3] = {0, 0, 0};
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j) mm[k] += M(k, j) * sim.population(n, j);
    double meq[3] = {mm[0], mm[1],
                     model.psi(2, 0) * mm[0] + model.psi(2, 1) * mm[1]};
    for (int j = 0; j < 3; ++j) {
      double f = 0;
      for (int k = 0; k < 3; ++k) f += Minv(j, k) * meq[k];
      int vx = model.scheme.velocities[j][0];
      expected[(std::size_t)((n + vx + 16) % 16) * 3 + j] = f;
    }
  }
  sim.step();
  for (int n = 0; n < 16; ++n)
    for (int j = 0; j < 3; ++j)
      CHECK(sim.population(n, j) ==
            doctest::Approx(expected[(std::size_t)n * 3 + j]).epsilon(1e-13));
}

TEST_CASE("periodic fluid runs conserve mass and momentum to 1e-12") {
  auto model = make_fluid_d2q9(make_d2q9<double>(1.0), 1.1, 1.2, 1.3, 1.25);
  auto g = make_periodic(2, 24, 24);
  Simulator sim(model, g, {});
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < g.node_count(); ++n)
    sim.set_equilibrium(n, {u(rng), u(rng), u(rng)});
  double rho0 = sim.total(0), qx0 = sim.total(1), qy0 = sim.total(2);
  for (int t = 0; t < 1000; ++t) sim.step();
  double scale = g.node_count();
  CHECK(std::abs(sim.total(0) - rho0) / scale < 1e-12);
  CHECK(std::abs(sim.total(1) - qx0) / scale < 1e-12);
  CHECK(std::abs(sim.total(2) - qy0) / scale < 1e-12);
}

TEST_CASE("periodic plane-wave decay equals the one-point rate to 1e-10") {
  auto model = heat5();
  int N = 32;
  auto g = make_periodic(2, N, N);
  Simulator sim(model, g, {});
  double k = 2.0 * M_PI * 3 / N;
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x)
      sim.set_equilibrium(g.index(x, y, 0), {std::cos(k * x)});
  auto project = [&]() {
    double c = 0;
    for (int y = 0; y < N; ++y)
      for (int x = 0; x < N; ++x)
        c += std::cos(k * x) * sim.conserved_moment(g.index(x, y, 0), 0);
    return c;
  };
  for (int t = 0; t < 100; ++t) sim.step();
  double c1 = project();
  for (int t = 0; t < 100; ++t) sim.step();
  double gamma_sim = std::log(c1 / project()) / 100.0;
  double kappa = (1.0 / 1.2 - 0.5) * 4.5 / 10.0;
  auto mr = measured_rate(amplification(model, {k, 0.0}), kappa * k * k);
  CHECK(std::abs(gamma_sim / mr.gamma_num - 1) < 1e-10);
}

TEST_CASE("mirroring the initial field mirrors the trajectory exactly") {
  auto model = heat5();
  int N = 16;
  auto g = make_periodic(2, N, N);
  Simulator a(model, g, {}), b(model, g, {});
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> field(g.node_count());
  for (auto& v : field) v = u(rng);
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x) {
      a.set_equilibrium(g.index(x, y, 0), {field[g.index(x, y, 0)]});
      b.set_equilibrium(g.index(x, y, 0), {field[g.index((N - x) % N, y, 0)]});
    }
  for (int t = 0; t < 25; ++t) {
    a.step();
    b.step();
  }
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x)
      CHECK(b.conserved_moment(g.index(x, y, 0), 0) ==
            doctest::Approx(a.conserved_moment(g.index((N - x) % N, y, 0), 0))
                .epsilon(1e-13));
}

TEST_CASE("octant with symmetric planes reproduces the full-sphere rate") {
  auto model = make_thermal_d3q7(make_d3q7<double>(1.0), 0.5, 1.26795, 1.2, 1.3);
  double R = 8.0;
  auto full = make_sphere(19, 19, 19, R, -0.5, -0.5, -0.5);
  auto oct = make_octant(R, {1, 1, 1});
  double kappa = (1.0 / 1.26795 - 0.5) * 6.5 / 21.0;
  double gth = kappa * std::pow(M_PI / R, 2);
  int T = (int)(2.0 / gth);
  Simulator sf(model, full, {BoundaryRule::Kind::anti_bounce_back, 1});
  auto mf = sphere_scalar_mode(full, 0, 1);
  double rate_full = fit_mode_rate(sf, full, mf, T / 4, T);
  Simulator so(model, oct, {BoundaryRule::Kind::anti_bounce_back, 1});
  auto mo = sphere_scalar_mode(oct, 0, 1);
  double rate_oct = fit_mode_rate(so, oct, mo, T / 4, T);
  CHECK(rate_oct == doctest::Approx(rate_full).epsilon(1e-10));
}

TEST_CASE("NaN states abort with the step index") {
  auto model = heat5();
  auto g = make_periodic(2, 8, 8);
  Simulator sim(model, g, {});
  sim.population(3, 2) = std::nan("");
  CHECK_THROWS_AS(sim.step(), std::runtime_error);
}

TEST_CASE("Krylov iteration on the identity map returns eigenvalue one") {
  ArnoldiOptions o;
  o.power = 1;
  o.krylov_size = 12;
  o.n_wanted = 2;
  auto r = arnoldi([](std::vector<double>&) {}, 50, o);
  REQUIRE(!r.empty());
  CHECK(std::abs(r[0].z - std::complex<double>(1.0, 0.0)) < 1e-12);
  CHECK(r[0].converged);
}

TEST_CASE("an even application power is rejected") {
  ArnoldiOptions o;
  o.power = 2;
  CHECK_THROWS_AS(arnoldi([](std::vector<double>&) {}, 10, o),
                  std::invalid_argument);
}

TEST_CASE("periodic-box eigenvalues match one-point rates for small modes") {
  auto model = heat5();
  int N = 16;
  auto g = make_periodic(2, N, N);
  Simulator sim(model, g, {});
  double kappa = (1.0 / 1.2 - 0.5) * 4.5 / 10.0;
  for (auto [ix, iy] : {std::pair<int, int>{1, 0}, {2, 1}, {3, 0}}) {
    std::vector<double> k = {2.0 * M_PI * ix / N, 2.0 * M_PI * iy / N};
    ArnoldiOptions o;
    o.power = 1;
    o.krylov_size = 32;
    o.n_wanted = 12;
    o.max_restarts = 0;
    o.start.assign((std::size_t)g.node_count() * 5, 0.0);
    for (int y = 0; y < N; ++y)
      for (int x = 0; x < N; ++x)
        sim.set_equilibrium(g.index(x, y, 0), {std::cos(k[0] * x + k[1] * y)});
    for (int n = 0; n < g.node_count(); ++n)
      for (int j = 0; j < 5; ++j) o.start[(std::size_t)n * 5 + j] = sim.population(n, j);
    auto apply = [&](std::vector<double>& v) {
      for (int n = 0; n < g.node_count(); ++n)
        for (int j = 0; j < 5; ++j) sim.population(n, j) = v[(std::size_t)n * 5 + j];
      sim.step();
      for (int n = 0; n < g.node_count(); ++n)
        for (int j = 0; j < 5; ++j) v[(std::size_t)n * 5 + j] = sim.population(n, j);
    };
    auto modes = arnoldi(apply, (int)o.start.size(), o);
    double kk = k[0] * k[0] + k[1] * k[1];
    auto mr = measured_rate(amplification(model, k), kappa * kk);
    double best = 1e9;
    for (const auto& m : modes)
      best = std::min(best, std::abs(mode_rate(m) / mr.gamma_num - 1));
    CHECK(best < 1e-10);
  }
}
