#pragma once

#include <cstdint>
#include <string>

#include "chlab/errors.hpp"

namespace chlab {

// Exact rational arithmetic over 128-bit integers. Used wherever a verdict
// must not depend on floating-point rounding: threshold comparisons against
// decimal constants (treated as exact rationals, e.g. 0.679 = 679/1000) and
// algebraic identity checks between closed forms.
class Rational {
 public:
  using Int = __int128;

  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  // Parses a decimal literal such as "2.91082" or "-0.679" exactly.
  static Rational from_decimal(const std::string& text);

  Rational operator+(const Rational& o) const { return raw(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
  Rational operator-(const Rational& o) const { return raw(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
  Rational operator*(const Rational& o) const { return raw(num_ * o.num_, den_ * o.den_); }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw DomainError("rational division by zero");
    return raw(num_ * o.den_, den_ * o.num_);
  }
  Rational operator-() const { return raw(-num_, den_); }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator<=(const Rational& o) const { return num_ * o.den_ <= o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  Int numerator() const { return num_; }
  Int denominator() const { return den_; }
  std::string str() const;

 private:
  static Rational raw(Int n, Int d) {
    Rational r;
    r.num_ = n;
    r.den_ = d;
    r.normalize();
    return r;
  }
  void normalize();

  Int num_;
  Int den_;  // > 0 after normalize()
};

}  // namespace chlab
