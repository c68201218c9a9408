#pragma once

#include <cstdint>
#include <vector>

#include "asf/scalar.hpp"

namespace asf {

/// Counter-based deterministic generator (splitmix64 finalizer over a
/// key/counter pair). A given (seed, stream) always yields the same values on
/// every platform, and distinct streams can be consumed independently, so
/// trials may be split without sharing state.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream * 0xD1B54A32D192ED03ull))) {}

  std::uint64_t next_u64() {
    counter_ += 1;
    return mix(key_ + counter_ * 0x9E3779B97F4A7C15ull);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1).
  double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

  /// Uniform scalar: real in [-1, 1), or complex with both parts so.
  template <Scalar T>
  T uniform_scalar() {
    if constexpr (is_complex_v<T>) {
      const double re = uniform_symmetric();
      const double im = uniform_symmetric();
      return T(typename T::value_type(re), typename T::value_type(im));
    } else {
      return T(uniform_symmetric());
    }
  }

  template <Scalar T>
  std::vector<T> uniform_vector(std::size_t n) {
    std::vector<T> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = uniform_scalar<T>();
    return v;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace asf
