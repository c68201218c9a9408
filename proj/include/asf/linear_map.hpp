#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/scalar.hpp"
#include "asf/vectors.hpp"

namespace asf {

/// Dense linear map stored row major as a d_out x d_in entry block.
/// Treat instances as immutable once built; operations return new values.
template <Scalar T>
class LinearMap {
 public:
  /// Zero map of the given shape.
  LinearMap(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("linear map must have positive shape");
    }
  }

  /// Row-major entries; validated finite.
  LinearMap(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0) {
      throw InvalidArgument("linear map must have positive shape");
    }
    if (entries_.size() != rows * cols) {
      throw DimensionMismatch("entry block does not match linear map shape");
    }
    for (const T& v : entries_) {
      if (!is_finite(v)) {
        throw InvalidArgument("linear map entries must be finite");
      }
    }
  }

  static LinearMap identity(std::size_t d) {
    LinearMap m(d, d);
    for (std::size_t i = 0; i < d; ++i) m.at(i, i) = T(1);
    return m;
  }

  static LinearMap diagonal(const std::vector<T>& diag) {
    LinearMap m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
  }

  /// Rank-one map column (x) row: (column tensor row)(v) = row(v) * column.
  static LinearMap outer(std::span<const T> column, std::span<const T> row) {
    LinearMap m(column.size(), row.size());
    for (std::size_t i = 0; i < column.size(); ++i) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        m.at(i, j) = column[i] * row[j];
      }
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const T& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  T& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  const std::vector<T>& entries() const { return entries_; }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(entries_.data() + i * cols_, cols_);
  }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> apply(std::span<const T> x) const {
    if (x.size() != cols_) {
      throw DimensionMismatch("map applied to vector of wrong dimension");
    }
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc(0);
      const T* r = entries_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) acc += r[j] * x[j];
      y[i] = acc;
    }
    return y;
  }

  /// Conjugate-transpose action, y -> A^H y.
  std::vector<T> apply_adjoint(std::span<const T> y) const {
    if (y.size() != rows_) {
      throw DimensionMismatch("adjoint applied to vector of wrong dimension");
    }
    std::vector<T> x(cols_, T(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      const T* r = entries_.data() + i * cols_;
      for (std::size_t j = 0; j < cols_; ++j) x[j] += conj_of(r[j]) * y[i];
    }
    return x;
  }

  T trace() const {
    if (!is_square()) throw DimensionMismatch("trace requires a square map");
    T acc(0);
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  real_t<T> max_abs() const {
    real_t<T> m = 0;
    for (const T& v : entries_) m = std::max(m, abs_of(v));
    return m;
  }

  /// Max absolute column sum (the induced 1-norm).
  real_t<T> one_norm() const {
    real_t<T> m = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      real_t<T> s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += abs_of((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  /// Max absolute row sum (the induced sup-norm).
  real_t<T> infinity_norm() const {
    real_t<T> m = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
      real_t<T> s = 0;
      for (std::size_t j = 0; j < cols_; ++j) s += abs_of((*this)(i, j));
      m = std::max(m, s);
    }
    return m;
  }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b);
    LinearMap c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      c.entries_[k] = a.entries_[k] + b.entries_[k];
    }
    return c;
  }

  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b);
    LinearMap c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      c.entries_[k] = a.entries_[k] - b.entries_[k];
    }
    return c;
  }

  friend LinearMap operator*(const T& s, const LinearMap& a) {
    LinearMap c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
      c.entries_[k] = s * a.entries_[k];
    }
    return c;
  }

 private:
  static void require_same_shape(const LinearMap& a, const LinearMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
      throw DimensionMismatch("linear map shapes do not match");
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

/// y = A x, with the exponent of x carried over to the image.
template <Scalar T>
PVector<T> apply(const LinearMap<T>& a, const PVector<T>& x) {
  return PVector<T>(a.apply(std::span<const T>(x.coords())), x.exponent());
}

/// (A compose B)(x) = A(B(x)); inner dimensions must agree.
template <Scalar T>
LinearMap<T> compose(const LinearMap<T>& a, const LinearMap<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("compose: inner dimensions do not match");
  }
  LinearMap<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T acc(0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c.at(i, j) = acc;
    }
  }
  return c;
}

/// Functional precomposed with a map: (f compose A)(x) = f(A x), i.e. the
/// coefficient row of f multiplied by A on the right.
template <Scalar T>
Functional<T> compose(const Functional<T>& f, const LinearMap<T>& a) {
  if (f.dim() != a.rows()) {
    throw DimensionMismatch("compose: functional length does not match map rows");
  }
  std::vector<T> c(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const T fi = f[i];
    for (std::size_t j = 0; j < a.cols(); ++j) c[j] += fi * a(i, j);
  }
  return Functional<T>(std::move(c));
}

/// Largest entrywise deviation between two maps of equal shape.
template <Scalar T>
real_t<T> max_abs_diff(const LinearMap<T>& a, const LinearMap<T>& b) {
  return (a - b).max_abs();
}

/// ||A - lambda I|| in the sup operator norm (max absolute row sum).
template <Scalar T>
real_t<T> deviation_from_scaled_identity(const LinearMap<T>& a, const T& lambda) {
  if (!a.is_square()) {
    throw DimensionMismatch("deviation check requires a square map");
  }
  LinearMap<T> d = a - lambda * LinearMap<T>::identity(a.rows());
  return d.infinity_norm();
}

}  // namespace asf
