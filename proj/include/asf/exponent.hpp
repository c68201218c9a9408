#pragma once

#include <limits>

#include "asf/errors.hpp"

namespace asf {

/// Norm exponent p in [1, inf]. Infinity selects the sup norm. Immutable.
class Exponent {
 public:
  /// Requires value >= 1 (infinity allowed, NaN rejected).
  explicit Exponent(double value) : value_(value) {
    if (!(value >= 1.0)) {
      throw InvalidArgument("exponent must satisfy p >= 1");
    }
  }

  static Exponent infinity() {
    return Exponent(std::numeric_limits<double>::infinity());
  }

  double value() const { return value_; }

  bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity();
  }

  /// Conjugate exponent q with 1/p + 1/q = 1; dual of 1 is inf and vice
  /// versa.
  Exponent dual() const {
    if (is_infinite()) return Exponent(1.0);
    if (value_ == 1.0) return infinity();
    return Exponent(value_ / (value_ - 1.0));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) {
    return !(a == b);
  }

 private:
  double value_;
};

}  // namespace asf
