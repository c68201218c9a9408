#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "asf/errors.hpp"
#include "asf/expansion.hpp"
#include "asf/frames.hpp"
#include "asf/linear_map.hpp"
#include "asf/norms.hpp"
#include "asf/scalar.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"

namespace asf {

// ============================================================================
// Truncated shift operators
// ============================================================================

/// Right shift on d coordinates: (x_1, ..., x_d) -> (0, x_1, ..., x_{d-1}).
/// The last coordinate falls off the edge of the truncation.
template <Scalar T>
LinearMap<T> shift_right(std::size_t d) {
  LinearMap<T> r(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) r.at(i + 1, i) = T(1);
  return r;
}

/// Left shift on d coordinates: (x_1, ..., x_d) -> (x_2, ..., x_d, 0).
template <Scalar T>
LinearMap<T> shift_left(std::size_t d) {
  LinearMap<T> l(d, d);
  for (std::size_t i = 0; i + 1 < d; ++i) l.at(i, i + 1) = T(1);
  return l;
}

// ============================================================================
// Canonical and shift-built systems
// ============================================================================

/// The biorthogonal system {(zeta_n, e_n)}: coordinate functionals paired
/// with basis vectors. Its frame operator is exactly the identity.
template <Scalar T>
FunctionalSystem<T> canonical_system(std::size_t d, Exponent p) {
  std::vector<SystemPair<T>> pairs;
  pairs.reserve(d);
  for (std::size_t n = 0; n < d; ++n) {
    pairs.push_back(SystemPair<T>{Functional<T>::coordinate(d, n),
                                  PVector<T>::basis(d, n, p)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

/// Canonical system wrapped as a verified reconstruction system; this is the
/// default reconstruction input of the expansion routines.
template <Scalar T>
ReconstructionSystem<T> canonical_reconstruction(std::size_t d, Exponent p,
                                                 const Tolerances& tol = {}) {
  return ReconstructionSystem<T>(canonical_system<T>(d, p), tol);
}

/// Shift-built system with f_n = zeta_n after a left shift and
/// tau_n = right shift of e_n, so the frame operator is the composition of
/// the shifts: diag(0, 1, ..., 1). The last pair degenerates to zero under
/// the truncation and is dropped, leaving d - 1 pairs. Requires d >= 2.
template <Scalar T>
FunctionalSystem<T> example_one_system(std::size_t d, Exponent p) {
  if (d < 2) {
    throw DimensionTooSmall("shift-built system requires dimension >= 2");
  }
  const LinearMap<T> r = shift_right<T>(d);
  const LinearMap<T> l = shift_left<T>(d);

  std::vector<SystemPair<T>> pairs;
  pairs.reserve(d - 1);
  for (std::size_t n = 0; n < d; ++n) {
    Functional<T> f = compose(Functional<T>::coordinate(d, n), l);
    // Qualified: complex scalars associate namespace std, and ADL must not
    // offer std::apply here.
    PVector<T> tau = asf::apply(r, PVector<T>::basis(d, n, p));
    const bool zero_pair = p_norm(f.coeffs(), Exponent(1)) == real_t<T>(0) &&
                           p_norm(tau.coords(), Exponent(1)) == real_t<T>(0);
    if (zero_pair) continue;
    pairs.push_back(SystemPair<T>{std::move(f), std::move(tau)});
  }
  return FunctionalSystem<T>(d, p, std::move(pairs));
}

// ============================================================================
// Analysis and synthesis operators
// ============================================================================

/// theta_f : x -> (f_1(x), ..., f_N(x)), an N x d map whose rows are the
/// functional coefficient lists.
template <Scalar T>
struct AnalysisMap {
  LinearMap<T> map;
};

/// theta_tau : (a_1, ..., a_N) -> sum_n a_n tau_n, a d x N map whose columns
/// are the synthesis vectors.
template <Scalar T>
struct SynthesisMap {
  LinearMap<T> map;
};

template <Scalar T>
AnalysisMap<T> analysis_operator(const FunctionalSystem<T>& sys) {
  LinearMap<T> m(sys.size(), sys.dim());
  for (std::size_t n = 0; n < sys.size(); ++n) {
    for (std::size_t j = 0; j < sys.dim(); ++j) m.at(n, j) = sys.pair(n).f[j];
  }
  return AnalysisMap<T>{std::move(m)};
}

template <Scalar T>
SynthesisMap<T> synthesis_operator(const FunctionalSystem<T>& sys) {
  LinearMap<T> m(sys.dim(), sys.size());
  for (std::size_t n = 0; n < sys.size(); ++n) {
    for (std::size_t i = 0; i < sys.dim(); ++i) m.at(i, n) = sys.pair(n).tau[i];
  }
  return SynthesisMap<T>{std::move(m)};
}

// ============================================================================
// p-space expansion with certified factorization
// ============================================================================

/// Expansion of a system into one that reconstructs, together with a direct
/// certificate on the sequence-space side: reported norms of the analysis
/// and synthesis maps of the expanded system (both finite by construction)
/// and the deviation of their composition from the identity.
template <Scalar T>
struct PSpaceCertificate {
  ExpansionResult<T> expansion;
  double analysis_norm = 0.0;
  double synthesis_norm = 0.0;
  bool norms_are_estimates = false;
  /// || theta_tau compose theta_f - I ||_inf for the expanded system.
  double factorization_residual = 0.0;
  bool certified = false;
};

/// Expand through the canonical reconstruction system (the deflected-vector
/// construction), then certify that the analysis and synthesis maps of the
/// expanded system compose to the identity within residual_tol.
template <Scalar T>
PSpaceCertificate<T> p_asf_expansion(const FunctionalSystem<T>& sys,
                                     const Tolerances& tol,
                                     const ExpansionOptions& opts = {},
                                     std::uint64_t norm_seed = kDefaultNormSeed) {
  tol.validate();
  const ReconstructionSystem<T> recon =
      canonical_reconstruction<T>(sys.dim(), sys.exponent(), tol);
  ExpansionResult<T> expansion = expand_variant_a(sys, recon, tol, opts);

  const AnalysisMap<T> analysis = analysis_operator(expansion.expanded);
  const SynthesisMap<T> synthesis = synthesis_operator(expansion.expanded);

  const OperatorNorm an =
      operator_p_norm_auto(analysis.map, sys.exponent(), norm_seed);
  const OperatorNorm sn =
      operator_p_norm_auto(synthesis.map, sys.exponent(), norm_seed);

  const double residual = double(deviation_from_scaled_identity(
      compose(synthesis.map, analysis.map), T(1)));

  PSpaceCertificate<T> out{std::move(expansion),
                           an.value,
                           sn.value,
                           an.is_estimate || sn.is_estimate,
                           residual,
                           residual <= tol.residual_tol};
  return out;
}

}  // namespace asf
