#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <span>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/exponent.hpp"
#include "asf/scalar.hpp"

namespace asf {

namespace detail {

template <Scalar T>
void require_finite_coords(const std::vector<T>& coords, const char* what) {
  if (coords.empty()) {
    throw InvalidArgument(std::string(what) + " must have dimension >= 1");
  }
  for (const T& c : coords) {
    if (!is_finite(c)) {
      throw InvalidArgument(std::string(what) + " entries must be finite");
    }
  }
}

}  // namespace detail

/// p-norm of a coordinate list: max |x_i| for p = inf, otherwise
/// (sum |x_i|^p)^(1/p) evaluated with max-scaling so large exponents do not
/// overflow.
template <Scalar T>
real_t<T> p_norm(std::span<const T> x, const Exponent& p) {
  using R = real_t<T>;
  R max_mag = 0;
  for (const T& v : x) max_mag = std::max(max_mag, abs_of(v));
  if (max_mag == R(0)) return R(0);
  if (p.is_infinite()) return max_mag;
  if (p.value() == 1.0) {
    R sum = 0;
    for (const T& v : x) sum += abs_of(v);
    return sum;
  }
  R sum = 0;
  for (const T& v : x) sum += std::pow(abs_of(v) / max_mag, R(p.value()));
  return max_mag * std::pow(sum, R(1) / R(p.value()));
}

template <Scalar T>
real_t<T> p_norm(const std::vector<T>& x, const Exponent& p) {
  return p_norm(std::span<const T>(x), p);
}

// ============================================================================
// PVector: a point of the finite sequence space
// ============================================================================

/// Coordinate vector with an attached norm exponent. Immutable after
/// construction; entries are validated finite.
template <Scalar T>
class PVector {
 public:
  PVector(std::vector<T> coords, Exponent p)
      : coords_(std::move(coords)), p_(p) {
    detail::require_finite_coords(coords_, "vector");
  }

  static PVector zero(std::size_t dim, Exponent p) {
    return PVector(std::vector<T>(dim, T(0)), p);
  }

  /// Canonical basis vector e_index (zero-based index).
  static PVector basis(std::size_t dim, std::size_t index, Exponent p) {
    if (index >= dim) throw InvalidArgument("basis index out of range");
    std::vector<T> c(dim, T(0));
    c[index] = T(1);
    return PVector(std::move(c), p);
  }

  std::size_t dim() const { return coords_.size(); }
  const Exponent& exponent() const { return p_; }
  const std::vector<T>& coords() const { return coords_; }
  const T& operator[](std::size_t i) const { return coords_[i]; }

  /// Norm in the vector's own exponent.
  real_t<T> norm() const { return p_norm(coords_, p_); }

 private:
  std::vector<T> coords_;
  Exponent p_;
};

// ============================================================================
// Functional: a member of the dual space in coordinates
// ============================================================================

/// Linear functional represented by its coefficient list. The pairing is
/// bilinear: f(x) = sum_i coeffs_i * x_i with no conjugation, for real and
/// complex scalars alike.
template <Scalar T>
class Functional {
 public:
  explicit Functional(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    detail::require_finite_coords(coeffs_, "functional");
  }

  static Functional zero(std::size_t dim) {
    return Functional(std::vector<T>(dim, T(0)));
  }

  /// Coordinate functional zeta_index: x -> x_index (zero-based index).
  static Functional coordinate(std::size_t dim, std::size_t index) {
    if (index >= dim) throw InvalidArgument("coordinate index out of range");
    std::vector<T> c(dim, T(0));
    c[index] = T(1);
    return Functional(std::move(c));
  }

  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }

  T operator()(std::span<const T> x) const {
    if (x.size() != coeffs_.size()) {
      throw DimensionMismatch("functional applied to vector of wrong dimension");
    }
    T acc(0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * x[i];
    return acc;
  }

  T operator()(const PVector<T>& x) const {
    return (*this)(std::span<const T>(x.coords()));
  }

  /// Coefficient norm in the given exponent (the dual exponent gives the
  /// functional's natural norm on the p space).
  real_t<T> coeff_norm(const Exponent& q) const { return p_norm(coeffs_, q); }

 private:
  std::vector<T> coeffs_;
};

}  // namespace asf
