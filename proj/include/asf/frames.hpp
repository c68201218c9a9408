#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/exponent.hpp"
#include "asf/linear_map.hpp"
#include "asf/norms.hpp"
#include "asf/rng.hpp"
#include "asf/scalar.hpp"
#include "asf/solve.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"

namespace asf {

// ============================================================================
// Systems of functional/vector pairs
// ============================================================================

/// One (f_n, tau_n) pair: a functional together with its synthesis vector.
template <Scalar T>
struct SystemPair {
  Functional<T> f;
  PVector<T> tau;
};

/// Finite family {(f_n, tau_n)} over a d-dimensional p space. Zero pairs are
/// permitted; empty families and shape mismatches are rejected.
template <Scalar T>
class FunctionalSystem {
 public:
  FunctionalSystem(std::size_t dim, Exponent p, std::vector<SystemPair<T>> pairs)
      : dim_(dim), p_(p), pairs_(std::move(pairs)) {
    if (dim_ == 0) throw InvalidArgument("system dimension must be >= 1");
    if (pairs_.empty()) throw InvalidArgument("system must contain at least one pair");
    for (const SystemPair<T>& pr : pairs_) {
      if (pr.f.dim() != dim_ || pr.tau.dim() != dim_) {
        throw DimensionMismatch("system pair does not match the ambient dimension");
      }
      if (pr.tau.exponent() != p_) {
        throw DimensionMismatch("system pair exponent does not match the system");
      }
    }
  }

  std::size_t dim() const { return dim_; }
  const Exponent& exponent() const { return p_; }
  std::size_t size() const { return pairs_.size(); }
  const std::vector<SystemPair<T>>& pairs() const { return pairs_; }
  const SystemPair<T>& pair(std::size_t n) const { return pairs_[n]; }

 private:
  std::size_t dim_;
  Exponent p_;
  std::vector<SystemPair<T>> pairs_;
};

/// Pairs of a, then pairs of b, over the same space.
template <Scalar T>
FunctionalSystem<T> concat(const FunctionalSystem<T>& a,
                           const FunctionalSystem<T>& b) {
  if (a.dim() != b.dim() || a.exponent() != b.exponent()) {
    throw DimensionMismatch("concat requires systems over the same space");
  }
  std::vector<SystemPair<T>> pairs = a.pairs();
  pairs.insert(pairs.end(), b.pairs().begin(), b.pairs().end());
  return FunctionalSystem<T>(a.dim(), a.exponent(), std::move(pairs));
}

// ============================================================================
// Frame operator
// ============================================================================

/// S x = sum_n f_n(x) tau_n, assembled entrywise as
/// S[i][j] = sum_n tau_n[i] f_n[j] in the given pair order. The kahan toggle
/// switches to compensated accumulation; default is plain summation.
template <Scalar T>
LinearMap<T> frame_operator(const FunctionalSystem<T>& sys, bool kahan = false) {
  const std::size_t d = sys.dim();
  LinearMap<T> s(d, d);
  if (!kahan) {
    for (const SystemPair<T>& pr : sys.pairs()) {
      for (std::size_t i = 0; i < d; ++i) {
        const T ti = pr.tau[i];
        if (ti == T(0)) continue;
        for (std::size_t j = 0; j < d; ++j) s.at(i, j) += ti * pr.f[j];
      }
    }
    return s;
  }
  LinearMap<T> comp(d, d);
  for (const SystemPair<T>& pr : sys.pairs()) {
    for (std::size_t i = 0; i < d; ++i) {
      const T ti = pr.tau[i];
      for (std::size_t j = 0; j < d; ++j) {
        const T term = ti * pr.f[j] - comp(i, j);
        const T sum = s(i, j) + term;
        comp.at(i, j) = (sum - s(i, j)) - term;
        s.at(i, j) = sum;
      }
    }
  }
  return s;
}

// ============================================================================
// Classification
// ============================================================================

/// Numerical verdict on a system: its Bessel bound ||S||_p (estimate-flagged
/// when p has no closed form), invertibility of S (the ASF property), the
/// tight scaling lambda when S is a scalar multiple of the identity, and the
/// reciprocal condition estimate of S.
template <Scalar T>
struct Classification {
  double bessel_bound = 0.0;
  bool bessel_is_estimate = false;
  bool is_asf = false;
  std::optional<T> tight_lambda;
  double condition_estimate = 0.0;
};

/// Classify a system at the given tolerances. Tightness is detected as
/// lambda = trace(S)/d with ||S - lambda I||_inf <= residual_tol; lambda = 0
/// is never reported tight (a numerically zero S is Bessel only).
template <Scalar T>
Classification<T> classify(const FunctionalSystem<T>& sys, const Tolerances& tol,
                           std::uint64_t norm_seed = kDefaultNormSeed) {
  tol.validate();
  const LinearMap<T> s = frame_operator(sys);

  Classification<T> out;
  const OperatorNorm bound = operator_p_norm_auto(s, sys.exponent(), norm_seed);
  out.bessel_bound = bound.value;
  out.bessel_is_estimate = bound.is_estimate;

  const InversionOutcome<T> inv = try_invert(s, tol);
  out.is_asf = inv.ok();
  out.condition_estimate = inv.rcond;

  const T lambda = s.trace() / T(real_t<T>(sys.dim()));
  if (out.is_asf && double(abs_of(lambda)) > tol.residual_tol &&
      double(deviation_from_scaled_identity(s, lambda)) <= tol.residual_tol) {
    out.tight_lambda = lambda;
  }
  return out;
}

// ============================================================================
// Reconstruction systems
// ============================================================================

/// A system {(g_n, omega_n)} whose frame operator is the identity within
/// residual_tol, i.e. x = sum_n g_n(x) omega_n holds numerically for all x.
/// Construction verifies the property and rejects systems without it.
template <Scalar T>
class ReconstructionSystem {
 public:
  ReconstructionSystem(FunctionalSystem<T> sys, const Tolerances& tol)
      : sys_(std::move(sys)) {
    tol.validate();
    const double dev = double(
        deviation_from_scaled_identity(frame_operator(sys_), T(1)));
    if (dev > tol.residual_tol) {
      throw InvalidArgument("system does not reconstruct: ||S - I|| exceeds residual_tol");
    }
  }

  const FunctionalSystem<T>& system() const { return sys_; }
  std::size_t dim() const { return sys_.dim(); }
  const Exponent& exponent() const { return sys_.exponent(); }

 private:
  FunctionalSystem<T> sys_;
};

// ============================================================================
// Reconstruction verification
// ============================================================================

struct ReconstructionReport {
  std::size_t trials = 0;
  /// max over trials of || S x - sum_n f_n(x) tau_n ||_p.
  double max_assembly_residual = 0.0;
  /// max over trials of || x - sum_n f_n(x) S^-1 tau_n ||_p.
  double max_reconstruction_residual = 0.0;
  bool passed = false;
};

/// Monte Carlo check that the system reconstructs through its inverted frame
/// operator. Requires an invertible frame operator (throws NotAnASF
/// otherwise). Trial vectors have entries uniform in [-1, 1) drawn from
/// per-trial streams of the given seed.
template <Scalar T>
ReconstructionReport verify_reconstruction(const FunctionalSystem<T>& sys,
                                           std::size_t trials,
                                           std::uint64_t seed,
                                           const Tolerances& tol) {
  tol.validate();
  const LinearMap<T> s = frame_operator(sys);
  InversionOutcome<T> inv = try_invert(s, tol);
  if (!inv.ok()) {
    throw NotAnASF("frame operator is not invertible at the given tolerances");
  }
  const LinearMap<T>& s_inv = *inv.inverse;

  const std::size_t d = sys.dim();
  // Dual vectors S^-1 tau_n, computed once.
  std::vector<std::vector<T>> dual;
  dual.reserve(sys.size());
  for (const SystemPair<T>& pr : sys.pairs()) {
    dual.push_back(s_inv.apply(std::span<const T>(pr.tau.coords())));
  }

  ReconstructionReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    SeededRng rng(seed, t);
    const std::vector<T> x = rng.uniform_vector<T>(d);

    const std::vector<T> sx = s.apply(x);
    std::vector<T> assembled(d, T(0));
    std::vector<T> rebuilt(d, T(0));
    for (std::size_t n = 0; n < sys.size(); ++n) {
      const T c = sys.pair(n).f(std::span<const T>(x));
      for (std::size_t i = 0; i < d; ++i) {
        assembled[i] += c * sys.pair(n).tau[i];
        rebuilt[i] += c * dual[n][i];
      }
    }

    std::vector<T> assembly_err(d);
    std::vector<T> recon_err(d);
    for (std::size_t i = 0; i < d; ++i) {
      assembly_err[i] = sx[i] - assembled[i];
      recon_err[i] = x[i] - rebuilt[i];
    }
    report.max_assembly_residual =
        std::max(report.max_assembly_residual,
                 double(p_norm(assembly_err, sys.exponent())));
    report.max_reconstruction_residual =
        std::max(report.max_reconstruction_residual,
                 double(p_norm(recon_err, sys.exponent())));
  }
  report.passed = report.max_assembly_residual <= tol.residual_tol &&
                  report.max_reconstruction_residual <= tol.residual_tol;
  return report;
}

}  // namespace asf
