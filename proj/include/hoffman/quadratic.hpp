#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

#include "hoffman/error.hpp"

namespace hoffman {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& x) {
  return static_cast<double>(x.numerator()) / static_cast<double>(x.denominator());
}

inline std::string to_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Exact real number of the form (p + q*sqrt(D)) / r with D squarefree.
///
/// Canonical form: r > 0, gcd(p, q, r) = 1, and q == 0 exactly when D == 0.
/// Two numbers can be combined when they share D or when one of them is
/// rational; mixing distinct radicals throws DomainError.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(std::int64_t value) : p_(value) {}  // NOLINT(implicit)
  QuadraticNumber(const Rational& value)              // NOLINT(implicit)
      : p_(value.numerator()), r_(value.denominator()) {}

  static QuadraticNumber make(std::int64_t p, std::int64_t q, std::int64_t d, std::int64_t r) {
    if (r == 0) throw DomainError("QuadraticNumber: zero denominator");
    if (d < 0) throw DomainError("QuadraticNumber: negative radicand");
    // pull square factors out of d
    std::int64_t root = 1;
    std::int64_t rest = d;
    for (std::int64_t f = 2; f * f <= rest; ++f) {
      while (rest % (f * f) == 0) {
        rest /= f * f;
        root *= f;
      }
    }
    return from_wide(p, static_cast<__int128>(q) * root, rest, r);
  }

  /// sqrt(m) for a nonnegative integer m.
  static QuadraticNumber sqrt(std::int64_t m) { return make(0, 1, m, 1); }

  /// sqrt(x) for a nonnegative rational x.
  static QuadraticNumber sqrt(const Rational& x) {
    if (x < 0) throw DomainError("QuadraticNumber::sqrt of a negative number");
    // sqrt(a/b) = sqrt(a*b)/b
    const __int128 ab = static_cast<__int128>(x.numerator()) * x.denominator();
    return make(0, 1, narrow(ab), x.denominator());
  }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t d() const { return d_; }
  std::int64_t r() const { return r_; }

  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && r_ == 1; }
  Rational rational() const {
    if (!is_rational()) throw DomainError("QuadraticNumber is irrational: " + str());
    return Rational(p_, r_);
  }
  double value() const {
    return (static_cast<double>(p_) + static_cast<double>(q_) * std::sqrt(static_cast<double>(d_))) /
           static_cast<double>(r_);
  }

  int sign() const {
    // sign of p + q*sqrt(D); r > 0
    const int sp = (p_ > 0) - (p_ < 0);
    const int sq = (q_ > 0) - (q_ < 0);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    const __int128 pp = static_cast<__int128>(p_) * p_;
    const __int128 qqd = static_cast<__int128>(q_) * q_ * d_;
    if (pp == qqd) return 0;  // unreachable for squarefree D > 1
    return pp > qqd ? sp : sq;
  }

  QuadraticNumber operator-() const { return from_wide(-static_cast<__int128>(p_), -static_cast<__int128>(q_), d_, r_); }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    const std::int64_t d = common_radicand(x, y);
    return from_wide(static_cast<__int128>(x.p_) * y.r_ + static_cast<__int128>(y.p_) * x.r_,
                     static_cast<__int128>(x.q_) * y.r_ + static_cast<__int128>(y.q_) * x.r_, d,
                     static_cast<__int128>(x.r_) * y.r_);
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }

  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const std::int64_t d = common_radicand(x, y);
    const __int128 p = static_cast<__int128>(x.p_) * y.p_ + static_cast<__int128>(x.q_) * y.q_ * d;
    const __int128 q = static_cast<__int128>(x.p_) * y.q_ + static_cast<__int128>(x.q_) * y.p_;
    return from_wide(p, q, d, static_cast<__int128>(x.r_) * y.r_);
  }

  QuadraticNumber inverse() const {
    // r / (p + q sqrt D) = r (p - q sqrt D) / (p^2 - q^2 D)
    const __int128 norm = static_cast<__int128>(p_) * p_ - static_cast<__int128>(q_) * q_ * d_;
    if (norm == 0) throw DomainError("QuadraticNumber: division by zero");
    return from_wide(static_cast<__int128>(r_) * p_, -static_cast<__int128>(r_) * q_, d_, norm);
  }

  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    common_radicand(x, y);
    return x * y.inverse();
  }

  QuadraticNumber& operator+=(const QuadraticNumber& y) { return *this = *this + y; }
  QuadraticNumber& operator-=(const QuadraticNumber& y) { return *this = *this - y; }
  QuadraticNumber& operator*=(const QuadraticNumber& y) { return *this = *this * y; }
  QuadraticNumber& operator/=(const QuadraticNumber& y) { return *this = *this / y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_ && x.r_ == y.r_;
  }
  friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// Human-readable exact form, e.g. "5/2", "-1+sqrt(5)", "(-1-sqrt(5))/2".
  std::string str() const {
    std::ostringstream os;
    if (q_ == 0) {
      os << p_;
      if (r_ != 1) os << "/" << r_;
      return os.str();
    }
    std::ostringstream num;
    if (p_ != 0) num << p_;
    if (q_ < 0) num << "-";
    else if (p_ != 0) num << "+";
    const std::int64_t aq = q_ < 0 ? -q_ : q_;
    if (aq != 1) num << aq << "*";
    num << "sqrt(" << d_ << ")";
    if (r_ == 1) return num.str();
    const bool compound = p_ != 0;
    os << (compound ? "(" : "") << num.str() << (compound ? ")" : "") << "/" << r_;
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadraticNumber& x) { return os << x.str(); }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 0;
  std::int64_t d_ = 0;
  std::int64_t r_ = 1;

  static std::int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("QuadraticNumber: value out of 64-bit range");
    return static_cast<std::int64_t>(v);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static std::int64_t common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.q_ == 0) return y.d_;
    if (y.q_ == 0) return x.d_;
    if (x.d_ != y.d_) throw DomainError("QuadraticNumber: mixing sqrt(" + std::to_string(x.d_) + ") and sqrt(" +
                                        std::to_string(y.d_) + ")");
    return x.d_;
  }

  // d must already be squarefree
  static QuadraticNumber from_wide(__int128 p, __int128 q, std::int64_t d, __int128 r) {
    if (r == 0) throw DomainError("QuadraticNumber: zero denominator");
    if (d == 1) {
      p += q;
      q = 0;
    }
    if (d == 0) q = 0;
    if (r < 0) {
      p = -p;
      q = -q;
      r = -r;
    }
    __int128 g = gcd128(gcd128(p, q), r);
    if (g > 1) {
      p /= g;
      q /= g;
      r /= g;
    }
    QuadraticNumber out;
    out.p_ = narrow(p);
    out.q_ = narrow(q);
    out.d_ = q == 0 ? 0 : d;
    out.r_ = narrow(r);
    return out;
  }
};

}  // namespace hoffman
