#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

#include "sptolemy/errors.hpp"

namespace sptolemy {

// Exact rational scalar (GMP-backed).
class Rational {
 public:
  using rep = boost::multiprecision::mpq_rational;

  Rational() : v_(0) {}
  Rational(std::int64_t n) : v_(n) {}                     // NOLINT(runtime/explicit)
  Rational(std::int64_t n, std::int64_t d) : v_(n) {
    if (d == 0) fail(errc::division_by_zero, "rational with zero denominator");
    v_ /= d;
  }
  explicit Rational(rep v) : v_(std::move(v)) {}

  const rep& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(rep(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(rep(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(rep(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "rational division by zero");
    return Rational(rep(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(rep(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational inverse() const {
    if (is_zero()) fail(errc::not_invertible, "inverse of zero");
    return Rational(rep(1 / v_));
  }

  double to_double() const { return v_.convert_to<double>(); }

  std::string str() const { return v_.str(); }

 private:
  rep v_;
};

inline Rational parse_rational(const std::string& s) {
  // integer or p/q, optional leading sign
  try {
    return Rational(Rational::rep(s));
  } catch (const std::exception&) {
    fail(errc::syntax_error, "bad rational literal '" + s + "'");
  }
}

}  // namespace sptolemy
