#pragma once

#include "nsmac/hull.hpp"
#include "nsmac/weight.hpp"

#include <stdexcept>
#include <vector>

namespace nsmac {

// A verified precondition of a constructive step failed. Carries the witness
// point; if one of these fires from the certification pipeline it would
// falsify a proved statement, so it is surfaced loudly rather than absorbed.
struct hypothesis_error : std::runtime_error {
    WeightVector witness;
    hypothesis_error(const std::string& what, WeightVector w)
        : std::runtime_error(what), witness(std::move(w)) {}
};

// Exchange axiom: for all x, y in S and every i with x_i > y_i there is a j
// with x_j < y_j and x - e_i + e_j in S. Mixed coordinate sums return false.
bool is_mconvex_exchange(const PointSet& S);

// S union (S + e_i - e_j), i != j (1-based).
PointSet minkowski_root_segment(const PointSet& S, int i, int j);

// Requires S M-convex and sigma_{i,j}(S) contained in
// S union (S + e_i - e_j); returns S union sigma_{i,j}(S).
// Throws hypothesis_error naming a violating reflected point otherwise.
PointSet union_reflection(const PointSet& S, int i, int j);

// supp equals the lattice points of its hull.
bool is_saturated(const PointSet& S);

// Every hull edge is parallel to some e_i - e_j. Dimension <= 0 is vacuous.
bool is_generalized_permutahedron(const LatticePolytope& P);

// Saturation plus the generalized-permutahedron edge test on the exact hull.
// Must agree with is_mconvex_exchange on every input; the test suites enforce
// that agreement rather than assuming it.
bool is_mconvex_geometric(const PointSet& S);

// f(A) = max over S of the coordinate sum over A, for every non-empty subset
// A of {1..n}. Guarded to n <= 20.
struct SupportFunctionProfile {
    int n = 0;
    std::vector<Int> values; // indexed by subset bitmask; entry 0 unused
};

SupportFunctionProfile support_function(const PointSet& S);
bool is_submodular(const SupportFunctionProfile& f);

} // namespace nsmac
