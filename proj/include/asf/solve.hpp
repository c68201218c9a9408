#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/linear_map.hpp"
#include "asf/scalar.hpp"
#include "asf/tolerances.hpp"

namespace asf {

/// Outcome of an inversion attempt. rcond estimates the reciprocal condition
/// number 1 / (||A||_1 ||A^-1||_1); it is 0 when A is singular. residual is
/// max(||A A^-1 - I||_inf, ||A^-1 A - I||_inf) when an inverse was produced.
template <Scalar T>
struct InversionOutcome {
  std::optional<LinearMap<T>> inverse;
  double rcond = 0.0;
  double residual = std::numeric_limits<double>::infinity();

  bool ok() const { return inverse.has_value(); }
};

/// Gauss-Jordan inversion with partial pivoting. Never throws for numerical
/// reasons; inspect the outcome. An inverse is reported only when the matrix
/// has no zero pivot, rcond >= invert_tol, and the round-trip residual stays
/// within residual_tol.
template <Scalar T>
InversionOutcome<T> try_invert(const LinearMap<T>& a, const Tolerances& tol) {
  tol.validate();
  if (!a.is_square()) throw DimensionMismatch("invert requires a square map");
  const std::size_t n = a.rows();

  LinearMap<T> work = a;
  LinearMap<T> inv = LinearMap<T>::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    real_t<T> pivot_mag = abs_of(work(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const real_t<T> m = abs_of(work(i, k));
      if (m > pivot_mag) {
        pivot_mag = m;
        pivot_row = i;
      }
    }
    if (pivot_mag == real_t<T>(0)) {
      return InversionOutcome<T>{};  // exactly singular
    }
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.at(k, j), work.at(pivot_row, j));
        std::swap(inv.at(k, j), inv.at(pivot_row, j));
      }
    }
    const T pivot = work(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      work.at(k, j) = work(k, j) / pivot;
      inv.at(k, j) = inv(k, j) / pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const T factor = work(i, k);
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.at(i, j) -= factor * work(k, j);
        inv.at(i, j) -= factor * inv(k, j);
      }
    }
  }

  InversionOutcome<T> out;
  const double denom = double(a.one_norm()) * double(inv.one_norm());
  out.rcond = denom > 0.0 ? 1.0 / denom : 0.0;

  const std::size_t d = n;
  const LinearMap<T> eye = LinearMap<T>::identity(d);
  const double fwd = double((compose(a, inv) - eye).infinity_norm());
  const double bwd = double((compose(inv, a) - eye).infinity_norm());
  out.residual = fwd > bwd ? fwd : bwd;

  if (out.rcond >= tol.invert_tol && out.residual <= tol.residual_tol) {
    out.inverse = std::move(inv);
  }
  return out;
}

/// A^-1, or NotInvertible when A is singular, has reciprocal condition below
/// invert_tol, or fails the round-trip residual check at residual_tol.
template <Scalar T>
LinearMap<T> invert(const LinearMap<T>& a, const Tolerances& tol) {
  InversionOutcome<T> out = try_invert(a, tol);
  if (out.ok()) return *std::move(out.inverse);
  if (out.rcond == 0.0) throw NotInvertible("matrix is singular");
  if (out.rcond < tol.invert_tol) {
    throw NotInvertible("matrix is ill conditioned: rcond below invert_tol");
  }
  throw NotInvertible("inverse residual exceeds residual_tol");
}

}  // namespace asf
