#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace facloc {

/// Exact rational number with arbitrary-precision integer parts.
///
/// Always kept canonical: denominator > 0, gcd(numerator, denominator) = 1,
/// zero is 0/1. Equality is therefore structural, and all arithmetic and
/// comparisons are exact. There is deliberately no construction from
/// floating point.
class Rational {
 public:
  using Int = boost::multiprecision::cpp_int;

  Rational() : value_(0) {}
  Rational(int v) : value_(v) {}                // NOLINT: implicit by design
  Rational(long v) : value_(v) {}               // NOLINT
  Rational(long long v) : value_(v) {}          // NOLINT
  Rational(const Int& v) : value_(v) {}         // NOLINT

  /// Canonicalizing constructor; throws std::domain_error when den == 0.
  Rational(const Int& num, const Int& den);

  /// Parses "17", "-3/4", "2.5", "-0.125". Fractions and finite decimals
  /// map losslessly. Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  Int numerator() const { return boost::multiprecision::numerator(value_); }
  Int denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Largest integer <= value.
  Int floor() const;

  /// "p/q", or just "p" when the value is an integer.
  std::string str() const;

  /// Fixed-point decimal rendering, round half away from zero.
  std::string decimal(int places = 6) const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.value_ + b.value_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.value_ - b.value_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.value_ * b.value_);
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(-a.value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.value_ != b.value_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.value_ < b.value_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.value_ > b.value_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.value_ >= b.value_;
  }

  friend Rational abs(const Rational& a) {
    return a.sign() < 0 ? -a : a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : value_(std::move(v)) {}

  Backend value_;
};

}  // namespace facloc
