#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace lbq {

/// Exact rational number with arbitrary-precision integer numerator and
/// denominator. Thin alias over GMP's canonicalizing rational type.
using Rational = mpq_class;

inline Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Element of the quadratic extension field Q[sqrt(3)]: value a + b*sqrt(3)
/// with exact rational a, b. Closed under +, -, *, / and canonical by
/// construction (the representation is unique since sqrt(3) is irrational).
class Quadratic {
 public:
  Quadratic() : a_(0), b_(0) {}
  Quadratic(int v) : a_(v), b_(0) {}             // NOLINT(runtime/explicit)
  Quadratic(const Rational& a) : a_(a), b_(0) {} // NOLINT(runtime/explicit)
  Quadratic(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt3_part() const { return b_; }

  Quadratic operator-() const { return {-a_, -b_}; }
  Quadratic& operator+=(const Quadratic& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& o) {
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) {
    // 1/(a + b sqrt3) = (a - b sqrt3) / (a^2 - 3 b^2); the norm never
    // vanishes for a nonzero element because sqrt(3) is irrational.
    Rational norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
    if (norm == 0) throw std::domain_error("Quadratic: division by zero");
    Rational a = (a_ * o.a_ - 3 * b_ * o.b_) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Quadratic& x, const Quadratic& y) {
    return !(x == y);
  }

 private:
  Rational a_, b_;
};

/// Per-mode scalar operations used by the generic algebra and the
/// expansion engine. Exactly one mode is chosen per computation.
template <class T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static constexpr bool exact = true;
  static Rational from_ratio(long num, long den) { return ratio(num, den); }
  static Rational from_int(long v) { return Rational(v); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational sqrt3() {
    throw std::domain_error("sqrt(3) is not representable in rational mode");
  }
  static std::string name() { return "rational"; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarOps<Quadratic> {
  static constexpr bool exact = true;
  static Quadratic from_ratio(long num, long den) { return Quadratic(ratio(num, den)); }
  static Quadratic from_int(long v) { return Quadratic(Rational(v)); }
  static double to_double(const Quadratic& x) {
    return x.rational_part().get_d() + x.sqrt3_part().get_d() * std::sqrt(3.0);
  }
  static bool is_zero(const Quadratic& x) { return x == Quadratic(); }
  static Quadratic sqrt3() { return Quadratic(Rational(0), Rational(1)); }
  static std::string name() { return "quadratic"; }
  static std::string to_string(const Quadratic& x) {
    return x.rational_part().get_str() + "+" + x.sqrt3_part().get_str() + "*sqrt3";
  }
};

template <>
struct ScalarOps<double> {
  static constexpr bool exact = false;
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_int(long v) { return static_cast<double>(v); }
  static double to_double(double x) { return x; }
  static bool is_zero(double x) { return x == 0.0; }
  static double sqrt3() { return std::sqrt(3.0); }
  static std::string name() { return "float"; }
  static std::string to_string(double x) { return std::to_string(x); }
};

}  // namespace lbq
