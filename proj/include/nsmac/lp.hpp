#pragma once

#include "nsmac/rational.hpp"
#include "nsmac/weight.hpp"

#include <vector>

namespace nsmac {

// Feasibility of A x = b, x >= 0, by an exact phase-one simplex with Bland's
// rule (finite termination, no tolerances).
bool lp_equality_feasible(std::vector<std::vector<Rational>> A,
                          std::vector<Rational> b);

// Is x a convex combination of the given points? (nonnegative weights
// summing to 1 reproducing x)
bool in_convex_hull(const PointSet& points, const std::vector<Rational>& x);

inline std::vector<Rational> to_rational(const WeightVector& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

} // namespace nsmac
