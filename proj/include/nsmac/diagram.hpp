#pragma once

#include "nsmac/weight.hpp"

#include <compare>
#include <vector>

namespace nsmac {

// A cell of the augmented column diagram. row 0 is the basement; the box in
// column j of the basement is fixed with label j in every augmented filling.
struct Box {
    Int col = 0; // 1..n
    Int row = 0; // 0 = basement, 1..mu_col for diagram boxes
    auto operator<=>(const Box&) const = default;
};

// Two distinct cells attack each other when they share a row, or sit in
// consecutive rows with the lower cell strictly to the right of the upper.
bool attacks(const Box& u, const Box& v);

// The column diagram of a composition with its basement and the precomputed
// attack pairs. Boxes are stored in reading order: rows bottom-to-top,
// left-to-right within a row; all deterministic iteration uses this order.
struct Diagram {
    Composition shape;
    std::vector<Box> boxes;    // diagram boxes (row >= 1) in reading order
    std::vector<Box> basement; // (j, 0) for j = 1..n
    // All attacking pairs involving at least one diagram box, each stored
    // once with the reading-order-earlier box first (basement boxes compare
    // before row-1 boxes via a trailing position).
    std::vector<std::pair<Box, Box>> attack_pairs;

    // Per diagram box (by index): earlier diagram boxes in reading order that
    // attack it, and the basement labels it attacks. Used by the enumerator.
    std::vector<std::vector<int>> earlier_attackers;
    std::vector<std::vector<Int>> basement_labels_attacked;

    std::size_t n() const { return shape.size(); }
    int box_index(const Box& b) const; // -1 when not a diagram box
};

Diagram build_diagram(const Composition& c);

} // namespace nsmac
