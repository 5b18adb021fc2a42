#pragma once

#include "nsmac/rational.hpp"
#include "nsmac/weight.hpp"

#include <vector>

namespace nsmac {

// normal . x <= offset for every point of the polytope, with equality exactly
// on the facet. Normals are primitive integer vectors supported on the pivot
// coordinates of the affine hull, so the inequality is valid within the hull.
struct FacetInequality {
    std::vector<Rational> normal;
    Rational offset;
};

struct LatticePolytope {
    PointSet points;   // the canonicalized input set
    PointSet vertices; // hull vertices (a subset of points), canonical order
    std::vector<std::pair<int, int>> edges; // index pairs into `vertices`, a < b
    std::vector<FacetInequality> facets;
    WeightVector base_point;                // a point of the affine hull
    std::vector<WeightVector> affine_basis; // primitive integer directions
    int dim = 0;                            // dimension of the affine hull
};

// Exact convex hull of a finite integer point set: dimension reduction to the
// affine hull, then double description on the dual cone. The input need not
// lie on a constant-sum hyperplane.
LatticePolytope convex_hull(const PointSet& S);

bool contains_point(const PointSet& S, const std::vector<Rational>& x);
bool contains_point(const LatticePolytope& P, const std::vector<Rational>& x);

// All integer points of conv(S). Requires constant coordinate sum: candidates
// are the integer bounding-box points on the sum hyperplane, kept when the
// exact LP membership test accepts them.
PointSet lattice_points(const PointSet& S);

LatticePolytope translate(const LatticePolytope& P, const WeightVector& shift);

} // namespace nsmac
