#pragma once

#include "asf/errors.hpp"

namespace asf {

/// Numerical thresholds shared by every operation. All nonnegative;
/// rank_tol is relative and must stay below 1.
struct Tolerances {
  /// Pivot threshold for rank decisions, relative to the largest pivot.
  double rank_tol = 1e-10;
  /// Minimum acceptable reciprocal condition number for inversion.
  double invert_tol = 1e-12;
  /// Bound on residual checks (inverse round trips, tightness, assembly).
  double residual_tol = 1e-8;

  void validate() const {
    if (!(rank_tol >= 0.0) || !(rank_tol < 1.0)) {
      throw InvalidArgument("rank_tol must lie in [0, 1)");
    }
    if (!(invert_tol >= 0.0)) {
      throw InvalidArgument("invert_tol must be nonnegative");
    }
    if (!(residual_tol >= 0.0)) {
      throw InvalidArgument("residual_tol must be nonnegative");
    }
  }
};

}  // namespace asf
