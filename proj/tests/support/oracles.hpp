#pragma once

// Independent reference computations for the test suites. Everything here is
// deliberately written through different routes than the library (column
// accumulation instead of row dot products, shifted power iteration instead
// of Jacobi sweeps) so agreement is evidence, not tautology.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "asf/asf.hpp"

namespace oracles {

using asf::Exponent;
using asf::Functional;
using asf::FunctionalSystem;
using asf::LinearMap;
using asf::PVector;
using asf::Scalar;
using asf::SeededRng;
using asf::SystemPair;

/// y = A x via column accumulation: y = sum_j x_j * column_j.
template <Scalar T>
std::vector<T> matvec_by_columns(const LinearMap<T>& a, const std::vector<T>& x) {
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const T xj = x[j];
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, j) * xj;
  }
  return y;
}

/// C = A B via the outer-product update C += col_k(A) (x) row_k(B).
template <Scalar T>
LinearMap<T> matmul_by_outer(const LinearMap<T>& a, const LinearMap<T>& b) {
  LinearMap<T> c(a.rows(), b.cols());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b(k, j);
    }
  }
  return c;
}

/// Frame operator via basis images: column j is sum_n f_n(e_j) tau_n.
template <Scalar T>
LinearMap<T> frame_operator_by_basis_images(const FunctionalSystem<T>& sys) {
  const std::size_t d = sys.dim();
  LinearMap<T> s(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t n = 0; n < sys.size(); ++n) {
      const T c = sys.pair(n).f[j];
      for (std::size_t i = 0; i < d; ++i) s.at(i, j) += c * sys.pair(n).tau[i];
    }
  }
  return s;
}

/// Largest singular value by shifted power iteration on the Gram matrix
/// B = A^H A: iterate v -> (B + shift I) v with the shift fixed at the max
/// row sum of B, then read the Rayleigh quotient back off.
template <Scalar T>
double spectral_norm_by_power_iteration(const LinearMap<T>& a,
                                        std::uint64_t seed = 9001,
                                        int iterations = 4000) {
  using R = asf::real_t<T>;
  const std::size_t n = a.cols();

  // B = A^H A, built directly.
  LinearMap<T> b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      T acc(0);
      for (std::size_t k = 0; k < a.rows(); ++k) {
        acc += asf::conj_of(a(k, i)) * a(k, j);
      }
      b.at(i, j) = acc;
    }
  }

  double shift = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += double(asf::abs_of(b(i, j)));
    shift = std::max(shift, row);
  }
  if (shift == 0.0) return 0.0;

  SeededRng rng(seed);
  std::vector<T> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = T(1) + T(R(0.25)) * rng.uniform_scalar<T>();

  double rayleigh = 0.0;
  for (int it = 0; it < iterations; ++it) {
    std::vector<T> w(n, T(0));
    for (std::size_t i = 0; i < n; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += b(i, j) * v[j];
      w[i] = acc + T(R(shift)) * v[i];
    }
    double nw = 0.0;
    for (const T& x : w) nw += double(asf::abs_of(x)) * double(asf::abs_of(x));
    nw = std::sqrt(nw);
    if (nw == 0.0) return 0.0;
    for (T& x : w) x = x / T(R(nw));

    T num(0);
    for (std::size_t i = 0; i < n; ++i) {
      T acc(0);
      for (std::size_t j = 0; j < n; ++j) acc += b(i, j) * w[j];
      num += asf::conj_of(w[i]) * acc;
    }
    rayleigh = double(asf::scalar_traits<T>::real_part(num));
    v = std::move(w);
  }
  return std::sqrt(std::max(rayleigh, 0.0));
}

/// Exact induced norms for the closed-form exponents, written longhand.
template <Scalar T>
double one_norm_by_columns(const LinearMap<T>& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += double(asf::abs_of(a(i, j)));
    best = std::max(best, s);
  }
  return best;
}

template <Scalar T>
double infinity_norm_by_rows(const LinearMap<T>& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += double(asf::abs_of(a(i, j)));
    best = std::max(best, s);
  }
  return best;
}

// ============================================================================
// Test input builders
// ============================================================================

template <Scalar T>
LinearMap<T> random_map(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  SeededRng rng(seed);
  LinearMap<T> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a.at(i, j) = rng.uniform_scalar<T>();
  }
  return a;
}

/// I + perturbation of spectral norm 1/2: condition number at most 3.
template <Scalar T>
LinearMap<T> well_conditioned_map(std::size_t d, std::uint64_t seed) {
  using R = asf::real_t<T>;
  LinearMap<T> b = random_map<T>(d, d, seed);
  const double s = spectral_norm_by_power_iteration(b, seed ^ 0xABCD, 600);
  if (s > 0.0) b = T(R(0.5 / s)) * b;
  return LinearMap<T>::identity(d) + b;
}

/// Sum of `rank` random outer products: exact rank with probability one.
template <Scalar T>
LinearMap<T> low_rank_map(std::size_t rows, std::size_t cols, std::size_t rank,
                          std::uint64_t seed) {
  LinearMap<T> a(rows, cols);
  SeededRng rng(seed);
  for (std::size_t k = 0; k < rank; ++k) {
    const std::vector<T> u = rng.uniform_vector<T>(rows);
    const std::vector<T> v = rng.uniform_vector<T>(cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) += u[i] * v[j];
    }
  }
  return a;
}

/// Integer-valued random system (entries in {-2..2}): sums of its frame
/// operator are exact in floating point, so order-of-summation tests can
/// demand bit equality.
template <Scalar T>
FunctionalSystem<T> integer_system(std::size_t d, std::size_t n_pairs,
                                   Exponent p, std::uint64_t seed) {
  SeededRng rng(seed);
  auto small_int = [&rng]() {
    return double(std::int64_t(rng.next_u64() % 5)) - 2.0;
  };
  std::vector<SystemPair<T>> pairs;
  for (std::size_t n = 0; n < n_pairs; ++n) {
    std::vector<T> f(d), tau(d);
    for (std::size_t i = 0; i < d; ++i) {
      if constexpr (asf::is_complex_v<T>) {
        f[i] = T(small_int(), small_int());
        tau[i] = T(small_int(), small_int());
      } else {
        f[i] = T(small_int());
        tau[i] = T(small_int());
      }
    }
    pairs.push_back(SystemPair<T>{Functional<T>(std::move(f)),
                                  PVector<T>(std::move(tau), p)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

}  // namespace oracles
