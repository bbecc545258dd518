#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lbq/collision.hpp"
#include "lbq/matrix.hpp"
#include "lbq/multi_index.hpp"
#include "lbq/scalar.hpp"
#include "lbq/scheme.hpp"

using namespace lbq;
using R = Rational;
using Q = Quadratic;

TEST_CASE("quadratic field arithmetic is exact and canonical") {
  Q a(ratio(1, 2), ratio(1, 3));   // 1/2 + (1/3) sqrt3
  Q b(ratio(-2, 5), ratio(1, 7));  // -2/5 + (1/7) sqrt3
  Q p = a * b;
  // (1/2)(-2/5) + 3*(1/3)(1/7) = -1/5 + 1/7 = -2/35
  CHECK(p.rational_part() == ratio(-2, 35));
  // (1/2)(1/7) + (1/3)(-2/5) = 1/14 - 2/15 = -13/210
  CHECK(p.sqrt3_part() == ratio(-13, 210));
  Q inv = Q(1) / a;
  CHECK(Q(a * inv) == Q(1));
  Q s = ScalarOps<Q>::sqrt3();
  CHECK(Q(s * s) == Q(3));
}

TEST_CASE("scalar traits round numbers through the three modes") {
  CHECK(ScalarOps<R>::from_ratio(3, 4) == ratio(3, 4));
  CHECK(ScalarOps<double>::from_ratio(3, 4) == doctest::Approx(0.75));
  CHECK(ScalarOps<R>::to_double(ratio(1, 8)) == doctest::Approx(0.125));
  CHECK(ScalarOps<Q>::to_double(ScalarOps<Q>::sqrt3()) ==
        doctest::Approx(std::sqrt(3.0)));
  CHECK(ScalarOps<R>::is_zero(R(0)));
  CHECK(!ScalarOps<R>::is_zero(ratio(1, 1000000)));
}

TEST_CASE("multi-index ordering is graded then lexicographic") {
  MultiIndex a{2, 0}, b{0, 2}, c{1, 0}, d{1, 1};
  CHECK(c < a);        // total order 1 < 2
  CHECK(b < a);        // same length, lexicographic on exponents
  CHECK(d < a);
  CHECK(a.length() == 2);
  CHECK((a + b) == MultiIndex{2, 2});
  CHECK((MultiIndex{2, 2} - a) == b);
  CHECK(MultiIndex{2, 1}.contains(MultiIndex{1, 1}));
  CHECK(!MultiIndex{2, 1}.contains(MultiIndex{0, 2}));
}

TEST_CASE("exact matrix inverse and identity") {
  Matrix<R> m(2, 2);
  m(0, 0) = ratio(1, 2);
  m(0, 1) = ratio(1, 3);
  m(1, 0) = ratio(1, 5);
  m(1, 1) = ratio(4, 7);
  auto inv = inverse(m);
  auto prod = m * inv;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(prod(i, j) == (i == j ? R(1) : R(0)));
  Matrix<R> sing(2, 2);
  sing(0, 0) = R(1);
  sing(1, 0) = R(2);
  CHECK_THROWS_AS(inverse(sing), std::domain_error);
}

template <class T>
static void check_moment_inverse(const SchemeDefinition<T>& s) {
  auto prod = s.moment_matrix * s.moment_inverse;
  for (int i = 0; i < s.velocity_count; ++i)
    for (int j = 0; j < s.velocity_count; ++j)
      CHECK(prod(i, j) == (i == j ? T(1) : T(0)));
}

TEST_CASE("moment matrices invert exactly for every velocity set") {
  check_moment_inverse(make_d1q3<R>(R(1)));
  check_moment_inverse(make_d2q5<R>(R(1)));
  check_moment_inverse(make_d2q9<R>(R(1)));
  check_moment_inverse(make_d3q7<R>(R(1)));
  check_moment_inverse(make_d3q19<R>(R(1)));
  // a non-unit velocity scale must not break exactness
  check_moment_inverse(make_d1q3<R>(R(2)));
  check_moment_inverse(make_d2q9<R>(ratio(3, 2)));
  check_moment_inverse(make_d3q19<R>(R(2)));
}

TEST_CASE("nineteen-velocity moment rows are mutually orthogonal") {
  auto s = make_d3q19<R>(R(1));
  for (int a = 0; a < 19; ++a)
    for (int b = a + 1; b < 19; ++b) {
      R dot(0);
      for (int l = 0; l < 19; ++l)
        dot += s.moment_matrix(a, l) * s.moment_matrix(b, l);
      CHECK(dot == R(0));
    }
}

TEST_CASE("velocity sets pair opposite directions") {
  for (const auto& s :
       {make_d2q5<double>(1.0), make_d2q9<double>(1.0), make_d3q7<double>(1.0),
        make_d3q19<double>(1.0)}) {
    for (int j = 0; j < s.velocity_count; ++j) {
      auto v = s.velocities[j];
      bool found = false;
      for (int k = 0; k < s.velocity_count; ++k)
        if (s.velocities[k][0] == -v[0] && s.velocities[k][1] == -v[1] &&
            s.velocities[k][2] == -v[2])
          found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("collision matrix has the conserved/relaxed block structure") {
  auto m = make_thermal_d2q5(make_d2q5<R>(R(1)), ratio(1, 2), ratio(6, 5),
                             ratio(11, 10), ratio(13, 10));
  // conserved rows: identity
  for (int j = 0; j < 5; ++j) CHECK(m.psi(0, j) == (j == 0 ? R(1) : R(0)));
  // relaxed rows: upper-right block is zero, diagonal is 1 - s_k
  for (int k = m.conserved; k < 5; ++k) {
    CHECK(m.psi(k, k) == R(R(1) - m.rates[k]));
    for (int j = m.conserved; j < 5; ++j)
      if (j != k) CHECK(m.psi(k, j) == R(0));
  }
}

TEST_CASE("momentum-conserving fluid model keeps three conserved rows") {
  auto m = make_fluid_d2q9(make_d2q9<R>(R(1)), ratio(11, 10), ratio(6, 5),
                           ratio(13, 10), ratio(5, 4));
  CHECK(m.conserved == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 9; ++j) CHECK(m.psi(i, j) == (i == j ? R(1) : R(0)));
}

TEST_CASE("rates outside (0, 2) are rejected") {
  auto sch = make_d2q5<double>(1.0);
  CHECK_THROWS_AS(make_thermal_d2q5(sch, 0.5, 2.0, 1.1, 1.3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_thermal_d2q5(sch, 0.5, 1.2, -0.1, 1.3),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_thermal_d2q5(sch, 0.5, 1.2, 1.1, 0.0),
                  std::invalid_argument);
}
