#pragma once

#include <cstdint>
#include <string>

#include "sptolemy/rational.hpp"

namespace sptolemy {

// Element p + q*sqrt(d) of Q(sqrt(d)), d a fixed square-free integer.
// Values with q == 0 are stored with d == 0 and are compatible with any d.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(std::int64_t n) : p_(n) {}  // NOLINT(runtime/explicit)
  QuadExt(Rational p, Rational q, std::int64_t d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
    normalize();
  }
  static QuadExt sqrt_d(std::int64_t d) { return QuadExt(Rational(0), Rational(1), d); }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = join(a, b);
    return QuadExt(a.p_ + b.p_, a.q_ + b.q_, d);
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = join(a, b);
    return QuadExt(a.p_ - b.p_, a.q_ - b.q_, d);
  }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    std::int64_t d = join(a, b);
    return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * Rational(d),
                   a.p_ * b.q_ + a.q_ * b.p_, d);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "quadratic division by zero");
    return a * b.inverse();
  }
  QuadExt operator-() const { return QuadExt(-p_, -q_, d_); }
  QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
  QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
  QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }
  QuadExt& operator/=(const QuadExt& o) { *this = *this / o; return *this; }

  friend bool operator==(const QuadExt& a, const QuadExt& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_.is_zero() || a.d_ == b.d_);
  }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

  QuadExt inverse() const {
    if (is_zero()) fail(errc::not_invertible, "inverse of zero");
    // (p + q sqrt d)(p - q sqrt d) = p^2 - q^2 d, nonzero since d is not a square
    Rational n = p_ * p_ - q_ * q_ * Rational(d_);
    if (n.is_zero()) fail(errc::not_invertible, "d is a perfect square; zero divisor");
    return QuadExt(p_ / n, -q_ / n, d_);
  }

  // lexicographic sign on (p, q); 0 only for the zero element
  int sign() const {
    if (!p_.is_zero()) return p_.sign();
    return q_.sign();
  }

  std::string str() const {
    if (q_.is_zero()) return p_.str();
    std::string rhs = q_.str() + "*sqrt(" + std::to_string(d_) + ")";
    if (p_.is_zero()) return rhs;
    if (q_.sign() > 0) return p_.str() + "+" + rhs;
    return p_.str() + "-" + (-q_).str() + "*sqrt(" + std::to_string(d_) + ")";
  }

 private:
  void normalize() {
    if (q_.is_zero()) d_ = 0;
  }
  static std::int64_t join(const QuadExt& a, const QuadExt& b) {
    if (a.q_.is_zero()) return b.d_;
    if (b.q_.is_zero()) return a.d_;
    if (a.d_ != b.d_) fail(errc::rank_mismatch, "mixing sqrt(d) with different d");
    return a.d_;
  }

  Rational p_{0};
  Rational q_{0};
  std::int64_t d_{0};
};

}  // namespace sptolemy
