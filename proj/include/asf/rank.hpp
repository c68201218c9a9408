#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/exponent.hpp"
#include "asf/linear_map.hpp"
#include "asf/scalar.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"

namespace asf {

namespace detail {

/// One rank-one term column (x) row extracted by pivoted elimination.
template <Scalar T>
struct PivotTerm {
  std::vector<T> column;
  std::vector<T> row;
  double pivot_magnitude = 0.0;
};

/// Column-pivoted rank-revealing elimination. At each step the residual
/// column holding the largest entry magnitude is selected (first such column
/// on ties), the largest entry within it is the pivot, and the rank-one
/// product of that column with the pivot-scaled row is peeled off. Pivots are
/// accepted while |pivot| > rank_tol * max(|A|_max, scale_floor); the
/// accepted count is the numerical rank. Fully deterministic.
template <Scalar T>
std::vector<PivotTerm<T>> pivoted_rank_terms(const LinearMap<T>& a,
                                             double rank_tol,
                                             double scale_floor = 0.0) {
  using R = real_t<T>;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  double scale = double(a.max_abs());
  if (scale_floor > scale) scale = scale_floor;
  const double threshold = rank_tol * scale;
  if (a.max_abs() == R(0)) return {};

  LinearMap<T> residual = a;
  std::vector<PivotTerm<T>> terms;
  const std::size_t max_terms = rows < cols ? rows : cols;

  for (std::size_t step = 0; step < max_terms; ++step) {
    std::size_t pi = 0, pj = 0;
    R best = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t arg = 0;
      R col_max = 0;
      for (std::size_t i = 0; i < rows; ++i) {
        const R m = abs_of(residual(i, j));
        if (m > col_max) {
          col_max = m;
          arg = i;
        }
      }
      if (col_max > best) {
        best = col_max;
        pi = arg;
        pj = j;
      }
    }
    if (!(double(best) > threshold)) break;

    const T pivot = residual(pi, pj);
    PivotTerm<T> term;
    term.pivot_magnitude = double(best);
    term.column = residual.column(pj);
    term.row.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) term.row[j] = residual(pi, j) / pivot;

    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        residual.at(i, j) -= term.column[i] * term.row[j];
      }
    }
    // The pivot row and column are exactly annihilated in exact arithmetic;
    // clear the rounding residue so they are never selected again.
    for (std::size_t j = 0; j < cols; ++j) residual.at(pi, j) = T(0);
    for (std::size_t i = 0; i < rows; ++i) residual.at(i, pj) = T(0);

    terms.push_back(std::move(term));
  }
  return terms;
}

}  // namespace detail

/// Numerical rank: the number of elimination pivots exceeding
/// rank_tol * max(largest entry magnitude of A, scale_floor). The optional
/// floor lets callers treat matrices that are pure rounding noise on a known
/// problem scale as zero.
template <Scalar T>
std::size_t numerical_rank(const LinearMap<T>& a, const Tolerances& tol,
                           double scale_floor = 0.0) {
  tol.validate();
  return detail::pivoted_rank_terms(a, tol.rank_tol, scale_floor).size();
}

/// Rank factorization A ~ sum_k omega_k (x) g_k with exactly
/// numerical_rank(A) terms, produced by the same pivoted elimination as the
/// rank count. The exponent p tags the column vectors with the space they
/// live in.
template <Scalar T>
std::vector<std::pair<PVector<T>, Functional<T>>> rank_factorization(
    const LinearMap<T>& a, const Exponent& p, const Tolerances& tol,
    double scale_floor = 0.0) {
  tol.validate();
  std::vector<detail::PivotTerm<T>> terms =
      detail::pivoted_rank_terms(a, tol.rank_tol, scale_floor);
  std::vector<std::pair<PVector<T>, Functional<T>>> out;
  out.reserve(terms.size());
  for (detail::PivotTerm<T>& t : terms) {
    out.emplace_back(PVector<T>(std::move(t.column), p),
                     Functional<T>(std::move(t.row)));
  }
  return out;
}

}  // namespace asf
