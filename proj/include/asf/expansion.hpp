#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/frames.hpp"
#include "asf/linear_map.hpp"
#include "asf/rank.hpp"
#include "asf/scalar.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"

namespace asf {

/// How an expansion built its added pairs:
///  A      keeps the reconstruction functionals, deflects the vectors
///         through lambda I - S;
///  B      deflects the functionals through I - S, keeps the vectors;
///  tight  rank factorization of lambda I - S (the minimal completion).
enum class ExpansionVariant { A, B, tight };

inline const char* to_string(ExpansionVariant v) {
  switch (v) {
    case ExpansionVariant::A: return "A";
    case ExpansionVariant::B: return "B";
    default: return "TIGHT";
  }
}

template <Scalar T>
struct ExpansionResult {
  std::vector<SystemPair<T>> added_pairs;
  FunctionalSystem<T> expanded;
  ExpansionVariant variant = ExpansionVariant::A;
  T lambda = T(1);
  std::size_t count_added = 0;
  /// || frame_operator(expanded) - lambda I ||_inf, the achieved tightness.
  double residual = 0.0;
};

struct ExpansionOptions {
  /// Drop added pairs that are numerically zero (norm <= rank_tol).
  bool prune = true;
  /// Compensated summation in frame operator assembly.
  bool kahan = false;
};

namespace detail {

template <Scalar T>
ExpansionResult<T> finish_expansion(const FunctionalSystem<T>& sys,
                                    std::vector<SystemPair<T>> added,
                                    ExpansionVariant variant, T lambda,
                                    bool kahan) {
  FunctionalSystem<T> expanded =
      added.empty()
          ? sys
          : concat(sys, FunctionalSystem<T>(sys.dim(), sys.exponent(), added));
  const double residual = double(
      deviation_from_scaled_identity(frame_operator(expanded, kahan), lambda));
  const std::size_t count = added.size();
  return ExpansionResult<T>{std::move(added), std::move(expanded), variant,
                            lambda, count, residual};
}

template <Scalar T>
void require_compatible(const FunctionalSystem<T>& sys,
                        const ReconstructionSystem<T>& recon) {
  if (sys.dim() != recon.dim() || sys.exponent() != recon.exponent()) {
    throw DimensionMismatch("system and reconstruction system live on different spaces");
  }
}

/// Shared body of variant A and the lambda-tight variant: added pairs are
/// (g_n, (lambda I - S) omega_n).
template <Scalar T>
ExpansionResult<T> expand_deflected_vectors(const FunctionalSystem<T>& sys,
                                            const ReconstructionSystem<T>& recon,
                                            T lambda, ExpansionVariant variant,
                                            const Tolerances& tol,
                                            const ExpansionOptions& opts) {
  tol.validate();
  require_compatible(sys, recon);

  const LinearMap<T> s = frame_operator(sys, opts.kahan);
  const LinearMap<T> deficiency =
      lambda * LinearMap<T>::identity(sys.dim()) - s;

  std::vector<SystemPair<T>> added;
  for (const SystemPair<T>& pr : recon.system().pairs()) {
    // Qualified: complex scalars associate namespace std, and ADL must not
    // offer std::apply here.
    PVector<T> rho = asf::apply(deficiency, pr.tau);
    if (opts.prune && double(rho.norm()) <= tol.rank_tol) continue;
    added.push_back(SystemPair<T>{pr.f, std::move(rho)});
  }
  return finish_expansion(sys, std::move(added), variant, lambda, opts.kahan);
}

}  // namespace detail

/// Expand an arbitrary system into one whose frame operator is the identity:
/// for each reconstruction pair (g_n, omega_n), append
/// (h_n, rho_n) = (g_n, (I - S) omega_n). With pruning enabled, pairs whose
/// vector has ||rho_n||_p <= rank_tol are dropped.
template <Scalar T>
ExpansionResult<T> expand_variant_a(const FunctionalSystem<T>& sys,
                                    const ReconstructionSystem<T>& recon,
                                    const Tolerances& tol,
                                    const ExpansionOptions& opts = {}) {
  return detail::expand_deflected_vectors(sys, recon, T(1), ExpansionVariant::A,
                                          tol, opts);
}

/// Mirror construction: append (h_n, rho_n) = (g_n (I - S), omega_n). With
/// pruning enabled, pairs whose functional has coefficient norm (in the dual
/// exponent) <= rank_tol are dropped.
template <Scalar T>
ExpansionResult<T> expand_variant_b(const FunctionalSystem<T>& sys,
                                    const ReconstructionSystem<T>& recon,
                                    const Tolerances& tol,
                                    const ExpansionOptions& opts = {}) {
  tol.validate();
  detail::require_compatible(sys, recon);

  const LinearMap<T> s = frame_operator(sys, opts.kahan);
  const LinearMap<T> deficiency =
      T(1) * LinearMap<T>::identity(sys.dim()) - s;
  const Exponent dual = sys.exponent().dual();

  std::vector<SystemPair<T>> added;
  for (const SystemPair<T>& pr : recon.system().pairs()) {
    Functional<T> h = compose(pr.f, deficiency);
    if (opts.prune && double(h.coeff_norm(dual)) <= tol.rank_tol) continue;
    added.push_back(SystemPair<T>{std::move(h), pr.tau});
  }
  return detail::finish_expansion(sys, std::move(added), ExpansionVariant::B,
                                  T(1), opts.kahan);
}

/// Lambda-tight expansion: append (g_n, (lambda I - S) omega_n), producing a
/// system whose frame operator is lambda I. lambda = 1 reduces to variant A
/// exactly. lambda = 0 is rejected.
template <Scalar T>
ExpansionResult<T> expand_tight(const FunctionalSystem<T>& sys,
                                const ReconstructionSystem<T>& recon, T lambda,
                                const Tolerances& tol,
                                const ExpansionOptions& opts = {}) {
  if (lambda == T(0)) throw ZeroLambda("tight expansion requires lambda != 0");
  return detail::expand_deflected_vectors(sys, recon, lambda,
                                          ExpansionVariant::tight, tol, opts);
}

/// Least number of pairs any lambda-tight expansion must add: the numerical
/// rank of lambda I - S. The rank threshold is floored at the problem scale
/// |lambda| so that systems already tight up to rounding report zero.
template <Scalar T>
std::size_t completion_lower_bound(const FunctionalSystem<T>& sys, T lambda,
                                   const Tolerances& tol) {
  if (lambda == T(0)) throw ZeroLambda("tightness bound requires lambda != 0");
  tol.validate();
  const LinearMap<T> deficiency =
      lambda * LinearMap<T>::identity(sys.dim()) - frame_operator(sys);
  return numerical_rank(deficiency, tol, double(abs_of(lambda)));
}

/// Minimal lambda-tight completion: rank-factor lambda I - S into exactly
/// numerical-rank many pairs (omega_k, g_k) and append them as
/// (f, tau) = (g_k, omega_k). count_added always equals
/// completion_lower_bound; an already tight system gains no pairs.
template <Scalar T>
ExpansionResult<T> minimal_tight_completion(const FunctionalSystem<T>& sys,
                                            T lambda, const Tolerances& tol,
                                            const ExpansionOptions& opts = {}) {
  if (lambda == T(0)) throw ZeroLambda("tight completion requires lambda != 0");
  tol.validate();

  const LinearMap<T> s = frame_operator(sys, opts.kahan);
  const LinearMap<T> deficiency =
      lambda * LinearMap<T>::identity(sys.dim()) - s;
  std::vector<std::pair<PVector<T>, Functional<T>>> terms = rank_factorization(
      deficiency, sys.exponent(), tol, double(abs_of(lambda)));

  std::vector<SystemPair<T>> added;
  added.reserve(terms.size());
  for (std::pair<PVector<T>, Functional<T>>& t : terms) {
    added.push_back(SystemPair<T>{std::move(t.second), std::move(t.first)});
  }
  return detail::finish_expansion(sys, std::move(added),
                                  ExpansionVariant::tight, lambda, opts.kahan);
}

}  // namespace asf
