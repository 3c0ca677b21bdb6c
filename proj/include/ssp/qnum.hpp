// SPDX-License-Identifier: Apache-2.0
#pragma once
//
// Exact arithmetic over Q and over the quadratic field Q[sqrt(57)].
//
// Every verified inequality in this library compares integer statistics
// against thresholds of the form a + b*sqrt(57) with rational a, b.  All
// verdicts go through the sign analysis below; floating point is only used
// for display.

#include <cassert>
#include <compare>
#include <cstdint>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ssp {

namespace detail {
inline __int128 abs128(__int128 v) { return v < 0 ? -v : v; }

inline __int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace detail

// Reduced fraction with positive denominator.  Components stay 64-bit;
// intermediates are 128-bit.  Instance-scale magnitudes (sums of word
// lengths, small constant denominators) never approach the limits, but the
// reduction asserts the fit anyway.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long num, long long den = 1) { *this = make(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                i128(x.den_) * y.den_);
  }
  friend Rational operator-(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                i128(x.den_) * y.den_);
  }
  friend Rational operator*(const Rational& x, const Rational& y) {
    return make(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
  }
  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num_ == 0) throw std::invalid_argument("rational division by zero");
    return make(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
  }
  Rational operator-() const { return make(-i128(num_), den_); }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    __int128 lhs = i128(x.num_) * y.den_;
    __int128 rhs = i128(y.num_) * x.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  using i128 = __int128;

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = detail::gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (detail::abs128(n) > kMax || d > kMax)
      throw std::overflow_error("rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  long long num_ = 0;
  long long den_ = 1;
};

// a + b*sqrt(57) with rational a, b.  Sign analysis is exact: for mixed
// signs it reduces to comparing a^2 with 57*b^2, and a^2 == 57*b^2 has no
// nonzero rational solution.
class Quad57 {
 public:
  constexpr Quad57() = default;
  Quad57(long long v) : a_(v) {}  // NOLINT: implicit integer lift is intended
  Quad57(Rational a, Rational b) : a_(a), b_(b) {}

  static Quad57 sqrt57() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  friend Quad57 operator+(const Quad57& x, const Quad57& y) {
    return {x.a_ + y.a_, x.b_ + y.b_};
  }
  friend Quad57 operator-(const Quad57& x, const Quad57& y) {
    return {x.a_ - y.a_, x.b_ - y.b_};
  }
  friend Quad57 operator*(const Quad57& x, const Quad57& y) {
    return {x.a_ * y.a_ + Rational(57) * x.b_ * y.b_,
            x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend Quad57 operator/(const Quad57& x, const Quad57& y) {
    Rational norm = y.a_ * y.a_ - Rational(57) * y.b_ * y.b_;
    if (norm.sign() == 0) throw std::invalid_argument("division by zero");
    Quad57 conj{y.a_, -y.b_};
    Quad57 prod = x * conj;
    return {prod.a_ / norm, prod.b_ / norm};
  }
  Quad57 operator-() const { return {-a_, -b_}; }

  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    Rational d = a_ * a_ - Rational(57) * b_ * b_;
    const int sd = d.sign();
    assert(sd != 0 && "sqrt(57) is irrational");
    return sa > 0 ? sd : -sd;
  }

  friend bool operator==(const Quad57& x, const Quad57& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Quad57& x, const Quad57& y) {
    const int s = (x - y).sign();
    return s < 0    ? std::strong_ordering::less
           : s > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(57.0);
  }
  std::string str() const {
    return a_.str() + " + " + b_.str() + "*sqrt57";
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace ssp
