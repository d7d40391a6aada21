#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "pclyap/errors.hpp"

namespace pclyap {

/// Exact rational scalar. Thin value wrapper around
/// boost::multiprecision::cpp_rational with a deliberately small constructor
/// surface so that Eigen's scalar-promotion machinery never trips over
/// boost's generic constructors.
class Rational {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(long long num, long long den);
  explicit Rational(rep v) : v_(std::move(v)) {}

  const rep& value() const { return v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const;
  int sign() const { return v_.sign(); }

  /// Nearest double (round-to-nearest via boost's conversion).
  double to_double() const { return v_.convert_to<double>(); }

  /// Numerator as int64 when it fits, for compact JSON output.
  /// Only meaningful when is_integer() holds and fits_int64() is true.
  bool fits_int64() const;
  std::int64_t to_int64() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_.is_zero()) throw DomainError("rational division by zero");
    return Rational(a.v_ / b.v_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  rep v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Parse an exact rational from text. Accepted forms:
///   "42"       integers
///   "-3/10"    fractions p/q
///   "-0.75"    finite decimals (kept exact: -3/4)
///   "2.5e-3"   decimals with a power-of-ten exponent
/// Anything else raises ParseError.
Rational parse_rational(const std::string& text);

/// Render exactly. Integers print bare ("-7"); values with a finite decimal
/// expansion of at most 40 fraction digits print as decimals ("0.125");
/// everything else prints as "p/q". parse_rational round-trips all forms.
std::string to_string(const Rational& r);

}  // namespace pclyap

namespace Eigen {
template <typename T>
struct NumTraits;

template <>
struct NumTraits<pclyap::Rational> {
  using Self = pclyap::Rational;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = long long;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 12,
    MulCost = 12
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Self highest() { return Self(0); }  // unused: unbounded type
  static inline Self lowest() { return Self(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
