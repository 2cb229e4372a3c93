#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace coarse {

/// Exact rational number. Always stored in canonical form.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(unsigned long value) : q_(value) {}  // NOLINT
  Rational(unsigned value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(long long value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(unsigned long long value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT
  Rational(long numerator, long denominator);

  /// Accepts "n", "n/d" or "-n/d" with decimal integers of any length.
  static Rational parse(std::string_view text);
  /// Builds from decimal numerator and denominator strings.
  static Rational from_parts(std::string_view numerator, std::string_view denominator);

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }
  /// "n/d", always with an explicit denominator.
  std::string str() const { return numerator() + "/" + denominator(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  /// Largest integer <= value. Throws InputError if it does not fit in int64.
  std::int64_t floor() const;
  double to_double() const { return q_.get_d(); }

  Rational abs() const;

  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

/// A rational or +infinity. Used for epsilon bounds and diameters.
class ExtRational {
 public:
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : value_(Rational(value)) {}  // NOLINT
  ExtRational(int value) : value_(Rational(value)) {}  // NOLINT

  static ExtRational infinity() { return ExtRational(); }
  /// Accepts "inf" or anything Rational::parse accepts.
  static ExtRational parse(std::string_view text);

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on infinity.
  const Rational& value() const;

  std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const ExtRational& a, const ExtRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (!a.value_ || !b.value_) {
      return static_cast<int>(a.value_.has_value() ? 0 : 1) <=> static_cast<int>(b.value_.has_value() ? 0 : 1);
    }
    return *a.value_ <=> *b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtRational& r) { return os << r.str(); }

 private:
  ExtRational() = default;
  std::optional<Rational> value_;
};

}  // namespace coarse
