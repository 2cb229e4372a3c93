#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace coarse {

/// A natural number or infinity. Chain indices and chain diameters live here.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t value) : value_(value) {  // NOLINT(google-explicit-constructor)
    if (value == kInfinity) throw std::overflow_error("ExtNat value collides with infinity");
  }

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.value_ = kInfinity;
    return e;
  }

  constexpr bool is_finite() const { return value_ != kInfinity; }
  constexpr bool is_infinite() const { return value_ == kInfinity; }

  constexpr std::uint64_t value() const {
    if (is_infinite()) throw std::logic_error("value() of infinite ExtNat");
    return value_;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) { return a.value_ <=> b.value_; }

  /// Infinity absorbs.
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtNat(a.value_ + b.value_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtNat e) { return os << e.str(); }

 private:
  static constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_ = 0;
};

}  // namespace coarse
