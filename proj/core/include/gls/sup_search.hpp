#pragma once

#include <functional>

#include "gls/interval.hpp"

namespace gls {

/// Outcome of a one-dimensional supremum over an open interval.
struct SupSearchResult {
  double value = 0.0;     ///< supremum; +inf on divergence
  double arg = 0.0;       ///< maximizer in p, or the endpoint (possibly +inf) it is approached at
  int iterations = 0;     ///< objective evaluations
  bool converged = false; ///< final bracket narrower than the tolerance
  bool attained = true;   ///< false when the sup is a limit at an open endpoint
};

struct SupSearchOptions {
  double tol = 1e-12;     ///< relative bracket width, in the search variable
  int grid_nodes = 129;   ///< coarse grid size, at least 65
  int max_iterations = 400;
};

using Objective = std::function<double(double)>;

/// Supremum of `objective(p)` over the open interval `domain`.
///
/// The search runs in ln p for finite b and in s = 1/p for b = +inf, so the
/// searched interval is always bounded. A coarse grid locates the best node,
/// then golden-section refinement runs on the bracket formed by its
/// neighbours. For unimodal objectives the value is accurate to
/// tol * (1 + |value|); otherwise the grid phase still yields a lower bound.
///
/// Throws Error{NonFiniteObjective} if the objective returns NaN and
/// Error{EmptyInterior} if no double lies strictly inside the interval.
SupSearchResult sup_over_interval(const Objective& objective, const Interval& domain,
                                  const SupSearchOptions& options);
SupSearchResult sup_over_interval(const Objective& objective, const Interval& domain,
                                  double tol = SupSearchOptions{}.tol);

}  // namespace gls
