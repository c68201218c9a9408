#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <type_traits>

namespace asf {

template <typename T>
struct is_complex : std::false_type {};

template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

/// Field over which vectors, functionals, and maps live: a real floating
/// point type or std::complex over one.
template <typename T>
concept Scalar =
    std::floating_point<T> ||
    (is_complex_v<T> && std::floating_point<typename T::value_type>);

template <Scalar T>
struct scalar_traits {
  using real_type = T;
  static constexpr bool is_complex_field = false;

  static real_type abs(T v) { return std::abs(v); }
  static T conj(T v) { return v; }
  static real_type real_part(T v) { return v; }
  static real_type imag_part(T) { return real_type(0); }
  static bool finite(T v) { return std::isfinite(v); }
  static T from_parts(real_type re, real_type) { return re; }
};

template <std::floating_point R>
struct scalar_traits<std::complex<R>> {
  using real_type = R;
  static constexpr bool is_complex_field = true;

  static R abs(const std::complex<R>& v) { return std::abs(v); }
  static std::complex<R> conj(const std::complex<R>& v) {
    return std::conj(v);
  }
  static R real_part(const std::complex<R>& v) { return v.real(); }
  static R imag_part(const std::complex<R>& v) { return v.imag(); }
  static bool finite(const std::complex<R>& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
  static std::complex<R> from_parts(R re, R im) { return {re, im}; }
};

/// Real type underlying a scalar field (double for both double and
/// std::complex<double>).
template <Scalar T>
using real_t = typename scalar_traits<T>::real_type;

template <Scalar T>
real_t<T> abs_of(const T& v) {
  return scalar_traits<T>::abs(v);
}

template <Scalar T>
T conj_of(const T& v) {
  return scalar_traits<T>::conj(v);
}

template <Scalar T>
bool is_finite(const T& v) {
  return scalar_traits<T>::finite(v);
}

/// v / |v| for nonzero v, zero otherwise. For real scalars this is the sign.
template <Scalar T>
T phase_of(const T& v) {
  const real_t<T> m = abs_of(v);
  if (m == real_t<T>(0)) return T(0);
  return v / T(m);
}

}  // namespace asf
