#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/frames.hpp"
#include "asf/linear_map.hpp"
#include "asf/norms.hpp"
#include "asf/rng.hpp"
#include "asf/scalar.hpp"
#include "asf/sequence_spaces.hpp"
#include "asf/solve.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"

namespace asf {

/// System of n_pairs random pairs with entries uniform in [-1, 1), drawn from
/// per-pair streams of the seed so the construction is reproducible.
template <Scalar T>
FunctionalSystem<T> random_system(std::size_t d, std::size_t n_pairs,
                                  Exponent p, std::uint64_t seed) {
  if (d == 0 || n_pairs == 0) {
    throw InvalidArgument("random system needs d >= 1 and n_pairs >= 1");
  }
  std::vector<SystemPair<T>> pairs;
  pairs.reserve(n_pairs);
  for (std::size_t n = 0; n < n_pairs; ++n) {
    SeededRng rng(seed, n);
    pairs.push_back(SystemPair<T>{Functional<T>(rng.uniform_vector<T>(d)),
                                  PVector<T>(rng.uniform_vector<T>(d), p)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

/// System with a known ground-truth deficiency: its frame operator is
/// S = lambda I - E where E is a random rank-r perturbation scaled to
/// spectral norm 1/2 (so rank(lambda I - S) = r exactly). S is split across
/// n_pairs >= d pairs by stacking the coordinate functionals over random
/// ones, F = [I; G], and solving T F = S through the Gram inverse of F.
template <Scalar T>
FunctionalSystem<T> deficiency_system(std::size_t d, std::size_t n_pairs,
                                      Exponent p, std::size_t rank, T lambda,
                                      std::uint64_t seed,
                                      const Tolerances& tol = {}) {
  if (d == 0) throw InvalidArgument("deficiency system needs d >= 1");
  if (rank > d) throw InvalidArgument("deficiency rank cannot exceed the dimension");
  if (n_pairs < d) {
    throw InvalidArgument("deficiency system needs n_pairs >= d to split the operator");
  }

  LinearMap<T> e(d, d);
  {
    SeededRng rng(seed, 0xE0);
    for (std::size_t k = 0; k < rank; ++k) {
      const std::vector<T> u = rng.uniform_vector<T>(d);
      const std::vector<T> v = rng.uniform_vector<T>(d);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) e.at(i, j) += u[i] * v[j];
      }
    }
    const double s2 = detail::spectral_norm(e);
    if (s2 > 0.0) e = T(real_t<T>(0.5 / s2)) * e;
  }
  const LinearMap<T> s_target = lambda * LinearMap<T>::identity(d) - e;

  // F rows: coordinate functionals first, then random rows. Full column rank
  // by construction, so the Gram matrix is always invertible.
  LinearMap<T> f(n_pairs, d);
  for (std::size_t i = 0; i < d; ++i) f.at(i, i) = T(1);
  {
    SeededRng rng(seed, 0xF0);
    for (std::size_t i = d; i < n_pairs; ++i) {
      const std::vector<T> row = rng.uniform_vector<T>(d);
      for (std::size_t j = 0; j < d; ++j) f.at(i, j) = row[j];
    }
  }

  // T = S (F^H F)^-1 F^H gives T F = S since (F^H F)^-1 F^H is a left
  // inverse of F.
  LinearMap<T> gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      T acc(0);
      for (std::size_t k = 0; k < n_pairs; ++k) acc += conj_of(f(k, i)) * f(k, j);
      gram.at(i, j) = acc;
    }
  }
  const LinearMap<T> gram_inv = invert(gram, tol);

  LinearMap<T> pseudo(d, n_pairs);  // (F^H F)^-1 F^H
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < n_pairs; ++k) {
      T acc(0);
      for (std::size_t j = 0; j < d; ++j) acc += gram_inv(i, j) * conj_of(f(k, j));
      pseudo.at(i, k) = acc;
    }
  }
  const LinearMap<T> synth = compose(s_target, pseudo);

  std::vector<SystemPair<T>> pairs;
  pairs.reserve(n_pairs);
  for (std::size_t n = 0; n < n_pairs; ++n) {
    std::vector<T> coeffs(d);
    for (std::size_t j = 0; j < d; ++j) coeffs[j] = f(n, j);
    pairs.push_back(SystemPair<T>{Functional<T>(std::move(coeffs)),
                                  PVector<T>(synth.column(n), p)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

}  // namespace asf
