#pragma once

#include "nsmac/weight.hpp"

#include <vector>

namespace nsmac {

// The Bruhat order on Z^n is the transitive closure of two generating
// relations, both implemented here as down-moves from the larger element:
//   type 1: i < j with v_i < v_j            ->  swap entries i and j
//   type 2: i < j with v_i > v_j + 1        ->  (v_i, v_j) := (v_j + 1, v_i - 1)
// Both preserve the coordinate sum.
PointSet lower_moves(const WeightVector& v);

struct BruhatIdeal {
    WeightVector top;
    PointSet elements; // downward closed, canonical order
    // Generating-relation edges (parent, child) discovered by the closure;
    // these generate the order but are not necessarily covering pairs.
    std::vector<std::pair<WeightVector, WeightVector>> edges;
};

// Breadth-first closure of mu under lower_moves. For mu with negative
// entries, ideal(mu) = (m,...,m) + ideal(mu') via normalize_weight.
BruhatIdeal ideal(const WeightVector& mu);

// lambda <= mu, decided by membership in ideal(mu). Sum mismatch is an
// immediate false.
bool leq(const WeightVector& lambda, const WeightVector& mu);

// Every non-negative lattice point of conv(ideal(mu)) lies in ideal(mu).
bool verify_conjecture38(const Composition& mu);

} // namespace nsmac
