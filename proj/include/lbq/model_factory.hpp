#pragma once

#include <stdexcept>
#include <string>

#include "lbq/collision.hpp"
#include "lbq/config.hpp"
#include "lbq/scalar.hpp"
#include "lbq/scheme.hpp"

namespace lbq {

/// Parse a scalar literal.  Accepted forms: decimal ("0.75", "-1.2e-3"),
/// exact ratio ("3/4"), and for exact scalar modes an optional sqrt(3)
/// component joined by '+' or '-': "1/6*sqrt3", "1/2+1/6*sqrt3".
template <class T>
T parse_scalar(const std::string& text);

namespace detail {

inline Rational rational_literal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  Rational r;
  auto slash = s.find('/');
  auto dot = s.find('.');
  auto exp = s.find_first_of("eE");
  if (slash != std::string::npos) {
    r = Rational(s, 10);
    if (r.get_den() == 0)
      throw std::invalid_argument("zero denominator in `" + text + "`");
    r.canonicalize();
  } else if (dot != std::string::npos || exp != std::string::npos) {
    long e10 = 0;
    if (exp != std::string::npos) {
      e10 = std::stol(s.substr(exp + 1));
      s.erase(exp);
      dot = s.find('.');
    }
    std::string digits = s;
    long frac = 0;
    if (dot != std::string::npos) {
      frac = (long)(s.size() - dot - 1);
      digits = s.substr(0, dot) + s.substr(dot + 1);
    }
    if (digits.empty()) throw std::invalid_argument("bad number `" + text + "`");
    r = Rational(mpz_class(digits, 10));
    long shift = e10 - frac;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, (unsigned long)std::labs(shift));
    if (shift >= 0)
      r *= Rational(p10);
    else
      r /= Rational(p10);
  } else {
    r = Rational(s, 10);
  }
  if (neg) r = -r;
  return r;
}

// Split "A+B*sqrt3" / "A-B*sqrt3" / "B*sqrt3" / "sqrt3" / "A" into the
// rational and sqrt(3) parts.
inline void quadratic_literal(const std::string& text, Rational& a,
                              Rational& b) {
  a = 0;
  b = 0;
  auto term = [&](std::string t, bool neg) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      neg ^= t[0] == '-';
      t.erase(0, 1);
    }
    auto star = t.find("*sqrt3");
    if (t == "sqrt3") {
      b += neg ? Rational(-1) : Rational(1);
    } else if (star != std::string::npos && star + 6 == t.size()) {
      Rational c = rational_literal(t.substr(0, star));
      b += neg ? -c : c;
    } else {
      Rational c = rational_literal(t);
      a += neg ? -c : c;
    }
  };
  // Find a top-level '+'/'-' separating two terms (skip a leading sign and
  // exponent signs after 'e'/'E').
  for (std::size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      term(text.substr(0, i), false);
      term(text.substr(i + 1), c == '-');
      return;
    }
  }
  term(text, false);
}

}  // namespace detail

template <>
inline double parse_scalar<double>(const std::string& text) {
  if (text.find("sqrt3") != std::string::npos) {
    Rational a, b;
    detail::quadratic_literal(text, a, b);
    return a.get_d() + b.get_d() * std::sqrt(3.0);
  }
  if (text.find('/') != std::string::npos)
    return detail::rational_literal(text).get_d();
  std::size_t pos = 0;
  double x = std::stod(text, &pos);
  if (pos != text.size())
    throw std::invalid_argument("bad number `" + text + "`");
  return x;
}

template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
  if (text.find("sqrt3") != std::string::npos)
    throw std::invalid_argument("`" + text +
                                "` needs the quadratic scalar mode");
  return detail::rational_literal(text);
}

template <>
inline Quadratic parse_scalar<Quadratic>(const std::string& text) {
  Rational a, b;
  detail::quadratic_literal(text, a, b);
  return Quadratic(a, b);
}

/// Build the relaxation model described by a configuration: `scheme`
/// selects the velocity set, `model` the family of equilibria, and the
/// remaining keys supply physical parameters and relaxation rates (each as
/// `s_<k>` or `sigma_<k>`).
template <class T>
CollisionModel<T> make_model(const Config& cfg) {
  auto scal = [&](const std::string& key) {
    return parse_scalar<T>(cfg.get_string(key));
  };
  auto scal_or = [&](const std::string& key, const std::string& dflt) {
    return parse_scalar<T>(cfg.get_string(key, dflt));
  };
  auto rate = [&](const std::string& moment) {
    std::string sk = "s_" + moment, gk = "sigma_" + moment;
    bool hs = cfg.has(sk), hg = cfg.has(gk);
    if (hs == hg)
      throw std::invalid_argument("exactly one of `" + sk + "` and `" + gk +
                                  "` must be given");
    if (hs) return parse_scalar<T>(cfg.get_string(sk));
    T sigma = parse_scalar<T>(cfg.get_string(gk));
    return T(T(1) / (sigma + ScalarOps<T>::from_ratio(1, 2)));
  };

  std::string name = cfg.get_string("scheme");
  std::string model = cfg.get_string("model");
  T lambda = scal_or("lambda", "1");

  if (name == "d1q3" && model == "thermal")
    return make_thermal_d1q3(make_d1q3<T>(lambda), scal("u"), scal("alpha"),
                             rate("1"), rate("2"));
  if (name == "d1q3" && model == "fluid")
    return make_fluid_d1q3(make_d1q3<T>(lambda), scal("alpha"), rate("2"));
  if (name == "d2q5" && model == "thermal")
    return make_thermal_d2q5(make_d2q5<T>(lambda), scal("alpha"), rate("1"),
                             rate("3"), rate("4"));
  if (name == "d2q9" && model == "advective")
    return make_advective_d2q9(make_d2q9<T>(lambda), scal("u"), scal("v"),
                               scal("xi"), scal("a4"), scal_or("a5", "-2"),
                               scal_or("a6", "-2"), rate("1"), rate("3"),
                               rate("4"), rate("5"), rate("7"), rate("8"));
  if (name == "d2q9" && model == "fluid")
    return make_fluid_d2q9(make_d2q9<T>(lambda), rate("3"), rate("4"),
                           rate("5"), rate("7"));
  if (name == "d3q7" && model == "thermal")
    return make_thermal_d3q7(make_d3q7<T>(lambda), scal("alpha"), rate("1"),
                             rate("4"), rate("6"));
  if (name == "d3q19" && model == "fluid")
    return make_fluid_d3q19(make_d3q19<T>(lambda), scal("alpha"), scal("beta"),
                            rate("4"), rate("5"), rate("10"), rate("13"),
                            rate("14"), rate("16"));
  throw std::invalid_argument("unsupported scheme/model pair `" + name +
                              "`/`" + model + "`");
}

}  // namespace lbq
