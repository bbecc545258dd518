#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include "lbq/config.hpp"
#include "lbq/model_factory.hpp"

using namespace lbq;

TEST_CASE("parsing reports every malformed line at once") {
  try {
    Config::parse("scheme = d2q5\nbad line\n= novalue\nalso bad\n");
    FAIL("expected a parse failure");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("configuration errors") != std::string::npos);
    CHECK(msg.find("bad line") != std::string::npos);
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find("also bad") != std::string::npos);
  }
}

TEST_CASE("duplicate keys are rejected") {
  CHECK_THROWS_AS(Config::parse("a = 1\na = 2\n"), std::invalid_argument);
}

TEST_CASE("comments and blank lines are ignored") {
  auto c = Config::parse("# heading\n\n  a = 1  # not stripped here\n");
  CHECK(c.has("a"));
}

TEST_CASE("unknown keys are listed together") {
  auto c = Config::parse("scheme = d2q5\nmystery = 1\npuzzle = 2\n");
  try {
    c.require_known({"scheme"});
    FAIL("expected unknown-key failure");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("mystery") != std::string::npos);
    CHECK(msg.find("puzzle") != std::string::npos);
  }
}

TEST_CASE("rate lookup enforces exactly one spelling per moment") {
  auto both = Config::parse("s_1 = 1.2\nsigma_1 = 0.3\n");
  CHECK_THROWS_AS(both.get_rate("1"), std::invalid_argument);
  auto neither = Config::parse("scheme = d2q5\n");
  CHECK_THROWS_AS(neither.get_rate("1"), std::invalid_argument);
  auto direct = Config::parse("s_1 = 1.25\n");
  CHECK(direct.get_rate("1") == 1.25);
  auto shifted = Config::parse("sigma_1 = 0.5\n");
  CHECK(shifted.get_rate("1") == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("serialization round-trips and hashes are stable") {
  auto c = Config::parse("b = 2\na = 1\n");
  auto d = Config::parse(c.serialize());
  CHECK(c == d);
  CHECK(c.hash() == d.hash());
  CHECK(c.hash().size() == 16);
  auto e = Config::parse("b = 2\na = 3\n");
  CHECK(c.hash() != e.hash());
}

TEST_CASE("typed getters validate their values") {
  auto c = Config::parse("n = 12\nx = 1.5\nword = hello\nlist = 1, 2, 3\n");
  CHECK(c.get_int("n") == 12);
  CHECK(c.get_double("x") == 1.5);
  CHECK(c.get_string("word") == "hello");
  CHECK(c.get_int_list("list") == std::vector<long>{1, 2, 3});
  CHECK_THROWS_AS(c.get_int("word"), std::invalid_argument);
  CHECK_THROWS_AS(c.get_double("word"), std::invalid_argument);
  CHECK_THROWS_AS(c.get_int("missing"), std::invalid_argument);
  CHECK(c.get_int("missing", 7) == 7);
}

TEST_CASE("numeric literals parse exactly in every scalar mode") {
  CHECK(bool(parse_scalar<Rational>("1/3") == ratio(1, 3)));
  CHECK(bool(parse_scalar<Rational>("-2/6") == ratio(-1, 3)));
  CHECK(bool(parse_scalar<Rational>("0.25") == ratio(1, 4)));
  CHECK(bool(parse_scalar<Rational>("2.5e-1") == ratio(1, 4)));
  CHECK(parse_scalar<double>("1/4") == 0.25);
  CHECK(parse_scalar<double>("1.25") == 1.25);
  CHECK(parse_scalar<double>("1/3*sqrt3") ==
        doctest::Approx(std::sqrt(3.0) / 3.0).epsilon(1e-15));
  auto q = parse_scalar<Quadratic>("1/2+1/6*sqrt3");
  CHECK(bool(q.rational_part() == ratio(1, 2)));
  CHECK(bool(q.sqrt3_part() == ratio(1, 6)));
  auto qneg = parse_scalar<Quadratic>("-sqrt3");
  CHECK(bool(qneg.sqrt3_part() == ratio(-1, 1)));
  CHECK_THROWS_AS(parse_scalar<double>("12abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar<Rational>("1/0"), std::invalid_argument);
}

TEST_CASE("model construction wires parameters into the relaxation matrix") {
  auto cfg = Config::parse(
      "scheme = d2q5\nmodel = thermal\nalpha = 1/2\n"
      "sigma_1 = 1/3\ns_3 = 1.1\ns_4 = 1.3\n");
  auto m = make_model<Rational>(cfg);
  CHECK(m.scheme.velocity_count == 5);
  // sigma_1 = 1/3 corresponds to rate 6/5
  CHECK(bool(m.rates[1] == ratio(6, 5)));
  CHECK(bool(m.rates[3] == ratio(11, 10)));
}

TEST_CASE("out-of-range relaxation rates are refused at model build") {
  auto cfg = Config::parse(
      "scheme = d2q5\nmodel = thermal\nalpha = 1/2\n"
      "s_1 = 2.5\ns_3 = 1.1\ns_4 = 1.3\n");
  CHECK_THROWS_AS(make_model<double>(cfg), std::invalid_argument);
}

TEST_CASE("unknown scheme names are refused") {
  auto cfg = Config::parse("scheme = d4q11\nmodel = thermal\n");
  CHECK_THROWS_AS(make_model<double>(cfg), std::invalid_argument);
}
