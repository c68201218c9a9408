#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "asf/errors.hpp"
#include "asf/exponent.hpp"
#include "asf/linear_map.hpp"
#include "asf/rng.hpp"
#include "asf/scalar.hpp"
#include "asf/vectors.hpp"

namespace asf {

enum class NormMode { exact, estimate };

/// Induced operator norm value plus a marker: exact closed forms carry
/// is_estimate = false, the iterative route reports a certified lower bound
/// with is_estimate = true.
struct OperatorNorm {
  double value = 0.0;
  bool is_estimate = false;
};

inline constexpr std::uint64_t kDefaultNormSeed = 0x243F6A8885A308D3ull;

namespace detail {

/// Largest eigenvalue of a dense symmetric matrix by cyclic Jacobi sweeps.
/// The matrix is passed row major and destroyed.
inline double jacobi_max_eigenvalue(std::vector<double>& m, std::size_t n) {
  if (n == 1) return m[0];
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return m[i * n + j];
  };

  double fro = 0.0;
  for (double v : m) fro += v * v;
  fro = std::sqrt(fro);
  const double stop = 1e-15 * (fro > 0.0 ? fro : 1.0);

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (std::sqrt(off) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  double best = at(0, 0);
  for (std::size_t i = 1; i < n; ++i) best = std::max(best, at(i, i));
  return best;
}

/// Real symmetric image of the Gram matrix A^H A. A complex Hermitian Gram
/// G = X + iY embeds as [[X, -Y], [Y, X]], which shares its spectrum.
template <Scalar T>
std::vector<double> symmetric_gram(const LinearMap<T>& a, std::size_t& n_out) {
  const std::size_t c = a.cols();
  if constexpr (!is_complex_v<T>) {
    n_out = c;
    std::vector<double> g(c * c, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = i; j < c; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < a.rows(); ++k) {
          acc += double(a(k, i)) * double(a(k, j));
        }
        g[i * c + j] = acc;
        g[j * c + i] = acc;
      }
    }
    return g;
  } else {
    n_out = 2 * c;
    std::vector<double> g(4 * c * c, 0.0);
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        T acc(0);
        for (std::size_t k = 0; k < a.rows(); ++k) {
          acc += conj_of(a(k, i)) * a(k, j);
        }
        const double x = scalar_traits<T>::real_part(acc);
        const double y = scalar_traits<T>::imag_part(acc);
        g[i * (2 * c) + j] = x;
        g[(c + i) * (2 * c) + (c + j)] = x;
        g[i * (2 * c) + (c + j)] = -y;
        g[(c + i) * (2 * c) + j] = y;
      }
    }
    return g;
  }
}

/// Largest singular value, computed from the Gram spectrum.
template <Scalar T>
double spectral_norm(const LinearMap<T>& a) {
  if (a.max_abs() == real_t<T>(0)) return 0.0;
  std::size_t n = 0;
  std::vector<double> g = symmetric_gram(a, n);
  const double lambda = jacobi_max_eigenvalue(g, n);
  return std::sqrt(std::max(lambda, 0.0));
}

/// Vector z with sum_i conj(z_i) y_i = ||y||_p and ||z||_q = 1 for the
/// conjugate exponent q: the norming functional of y. Zero input gives zero.
template <Scalar T>
std::vector<T> norming_vector(const std::vector<T>& y, const Exponent& p) {
  using R = real_t<T>;
  std::vector<T> z(y.size(), T(0));
  const R ny = p_norm(y, p);
  if (ny == R(0)) return z;

  if (p.is_infinite()) {
    std::size_t arg = 0;
    R best = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const R m = abs_of(y[i]);
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    z[arg] = phase_of(y[arg]);
    return z;
  }
  if (p.value() == 1.0) {
    for (std::size_t i = 0; i < y.size(); ++i) z[i] = phase_of(y[i]);
    return z;
  }
  const R pm1 = R(p.value() - 1.0);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const R m = abs_of(y[i]);
    if (m == R(0)) continue;
    z[i] = phase_of(y[i]) * T(std::pow(m / ny, pm1));
  }
  return z;
}

/// Dual-exponent nonlinear power iteration from one start vector; every
/// iterate value ||A x||_p with ||x||_p = 1 is a lower bound on the norm, so
/// the running maximum is returned.
template <Scalar T>
double p_norm_iteration(const LinearMap<T>& a, const Exponent& p,
                        std::vector<T> x, int iterations) {
  using R = real_t<T>;
  const Exponent q = p.dual();
  const R nx0 = p_norm(x, p);
  if (nx0 == R(0)) return 0.0;
  for (T& v : x) v = v / T(nx0);

  double best = 0.0;
  for (int it = 0; it < iterations; ++it) {
    const std::vector<T> y = a.apply(x);
    const R gamma = p_norm(y, p);
    if (double(gamma) > best) best = double(gamma);
    if (gamma == R(0)) break;

    const std::vector<T> z = a.apply_adjoint(norming_vector(y, p));
    const R zeta = p_norm(z, q);
    if (zeta == R(0)) break;

    // Stationarity test: the iteration has converged when ||z||_q is already
    // attained by the pairing with the current x.
    R attained = 0;
    {
      T acc(0);
      for (std::size_t i = 0; i < z.size(); ++i) acc += conj_of(z[i]) * x[i];
      attained = scalar_traits<T>::real_part(acc);
    }
    if (zeta <= attained * (R(1) + R(1e-14))) break;

    // norming_vector(z, q) maximizes Re(z^H x) over the unit p ball, which
    // makes the iterate values nondecreasing.
    std::vector<T> xn = norming_vector(z, q);
    const R nxn = p_norm(xn, p);
    if (nxn == R(0)) break;
    for (T& v : xn) v = v / T(nxn);
    x = std::move(xn);
  }
  return best;
}

/// Multi-start estimate: the canonical basis vector of the column with the
/// largest p-norm, then seeded random starts; 32 iterations each, maximum
/// reported.
template <Scalar T>
double estimate_operator_p_norm(const LinearMap<T>& a, const Exponent& p,
                                std::uint64_t seed) {
  constexpr int kIterations = 32;
  constexpr int kRestarts = 8;

  std::size_t best_col = 0;
  double best_norm = -1.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const double n = double(p_norm(a.column(j), p));
    if (n > best_norm) {
      best_norm = n;
      best_col = j;
    }
  }

  double best = 0.0;
  for (int r = 0; r < kRestarts; ++r) {
    std::vector<T> start;
    if (r == 0) {
      start.assign(a.cols(), T(0));
      start[best_col] = T(1);
    } else {
      SeededRng rng(seed, std::uint64_t(r));
      start = rng.uniform_vector<T>(a.cols());
    }
    best = std::max(best, p_norm_iteration(a, p, std::move(start), kIterations));
  }
  return best;
}

}  // namespace detail

/// Induced p -> p operator norm. Exact mode supports p in {1, 2, inf} (max
/// absolute column sum, largest singular value, max absolute row sum) and
/// throws UnsupportedExact elsewhere. Estimate mode runs the dual-exponent
/// power iteration for any p and reports a certified lower bound flagged
/// is_estimate.
template <Scalar T>
OperatorNorm operator_p_norm(const LinearMap<T>& a, const Exponent& p,
                             NormMode mode,
                             std::uint64_t seed = kDefaultNormSeed) {
  if (mode == NormMode::exact) {
    if (p.value() == 1.0) return {double(a.one_norm()), false};
    if (p.is_infinite()) return {double(a.infinity_norm()), false};
    if (p.value() == 2.0) return {detail::spectral_norm(a), false};
    throw UnsupportedExact("exact operator norm requires p in {1, 2, inf}");
  }
  return {detail::estimate_operator_p_norm(a, p, seed), true};
}

/// Exact norm when p has a closed form, estimate otherwise.
template <Scalar T>
OperatorNorm operator_p_norm_auto(const LinearMap<T>& a, const Exponent& p,
                                  std::uint64_t seed = kDefaultNormSeed) {
  if (p.value() == 1.0 || p.value() == 2.0 || p.is_infinite()) {
    return operator_p_norm(a, p, NormMode::exact, seed);
  }
  return operator_p_norm(a, p, NormMode::estimate, seed);
}

}  // namespace asf
