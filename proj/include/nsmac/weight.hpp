#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nsmac {

using Int = long long;

// A point of the weight lattice Z^n. The length n is the value's length;
// operations on vectors of different lengths are contract violations, never
// silent broadcasts.
using WeightVector = std::vector<Int>;

// A weight vector with non-negative entries. Checked at the entry points
// that require it (check_composition).
using Composition = WeightVector;

// A finite set of weight vectors in canonical (lexicographic, deduplicated)
// order. Shared by support sets, Bruhat ideals, and the geometry module.
using PointSet = std::vector<WeightVector>;

inline Int weight_sum(const WeightVector& v) {
    Int s = 0;
    for (Int x : v) s += x;
    return s;
}

void check_composition(const WeightVector& v);
void check_same_length(const WeightVector& a, const WeightVector& b);

// s_i: swap entries i, i+1 (1-based, 1 <= i <= n-1).
WeightVector simple_transposition(const WeightVector& v, int i);

// sigma_{i,j}: swap entries i and j (1-based, 1 <= i < j <= n).
WeightVector transposition(const WeightVector& v, int i, int j);

// pi: (a_1,...,a_n) -> (a_n + 1, a_1, ..., a_{n-1}). Raises the coordinate
// sum by exactly 1.
WeightVector pi_op(const WeightVector& v);

// (a_1,...,a_n) -> (a_n, a_1, ..., a_{n-1}).
WeightVector rotate_right(const WeightVector& v);

// Unique decomposition v = (m,...,m) + c with c a composition, min(c) = 0.
std::pair<Int, Composition> normalize_weight(const WeightVector& v);

WeightVector unit_vector(std::size_t n, int i); // e_i, 1-based
WeightVector add(const WeightVector& a, const WeightVector& b);
WeightVector sub(const WeightVector& a, const WeightVector& b);

// Canonicalize in place: lexicographic sort + dedup.
void canonicalize(PointSet& s);
bool point_set_contains(const PointSet& s, const WeightVector& v); // s canonical
PointSet translate(const PointSet& s, const WeightVector& shift);
PointSet apply_simple_transposition(const PointSet& s, int i);

} // namespace nsmac
