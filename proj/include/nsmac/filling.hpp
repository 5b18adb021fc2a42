#pragma once

#include "nsmac/diagram.hpp"

#include <vector>

namespace nsmac {

// A labeling of the diagram boxes of `shape` by {1..n}, stored in reading
// order (rows bottom-to-top, left-to-right). The basement is implied: the
// augmented filling labels the basement box in column j with j.
struct Filling {
    Composition shape;
    std::vector<Int> labels; // labels[k] belongs to build_diagram(shape).boxes[k]
    bool operator==(const Filling&) const = default;
};

// True iff no attacking pair of the augmented diagram (including
// box-vs-basement pairs) shares a label. Labels must lie in 1..n.
bool is_nonattacking(const Filling& f);

// All non-attacking fillings of c, emitted with boxes in reading order and
// labels chosen ascending, so the output order is canonical.
std::vector<Filling> enumerate_nonattacking(const Composition& c);

// Entry j counts the boxes labeled j.
WeightVector multiplicity(const Filling& f);

// The multiplicity image of all non-attacking fillings, canonically ordered.
PointSet support_by_enumeration(const Composition& c);

// Relabel boxes through a permutation of label values; perm[v-1] is the image
// of value v.
Filling relabel(const Filling& f, const std::vector<Int>& perm);

// The one-parameter family nu_1..nu_m obtained by sliding a column of height
// `column_height` across the first `prefix_length` positions in front of a
// fixed base: nu_i = 0^{i-1} * a * 0^{m-i} * base. All members share one box
// set: boxes are identified positionally, and reading orders agree member to
// member, so label vectors transfer verbatim.
struct NuFamily {
    Composition base;
    Int column_height = 1;  // a >= 1
    int prefix_length = 2;  // m >= 2

    NuFamily(Composition base_, Int a, int m);
    int size() const { return prefix_length; }
    std::size_t member_length() const { return prefix_length + base.size(); }
    Composition member(int i) const; // nu_i, 1 <= i <= m
};

// Flip the labels i <-> i+1 along the maximal attacking chain that starts at
// the bottom box of the moving column of nu_{i+1}. `f` must be a
// non-attacking filling of nu_{i+1} whose bottom moving-column box is labeled
// i+1 (i.e. f lies in L(nu_{i+1}) \ L(nu_i)); the result is a non-attacking
// filling of nu_i that agrees with f off the chain.
Filling chain_flip(const NuFamily& fam, int i, const Filling& f);

// Same flip with the family read off the shape: entries 1..i must be zero and
// entry i+1 positive; the result lives on the shape with columns i, i+1
// swapped. (The flip does not depend on where the family's prefix ends.)
Filling chain_flip(const Filling& f, int i);

// L(nu_{i+1}) == L(nu_i) disjoint-union sigma_{1,i+1}(L(nu_1)), checked on
// enumerated labelings under the box identification.
bool verify_partial_sym(const NuFamily& fam, int i);

// s_i(supp(E_{nu_i})) subset of supp(E_{nu_i}) union (supp(E_{nu_i}) +
// e_{i+1} - e_i), on enumerated supports.
bool verify_reflection_inclusion(const NuFamily& fam, int i);

} // namespace nsmac
