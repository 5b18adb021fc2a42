#include "nsmac/diagram.hpp"

#include <algorithm>

namespace nsmac {

bool attacks(const Box& u, const Box& v) {
    if (u == v) return false;
    if (u.row == v.row) return true;
    // lower-row box strictly right of the upper-row box
    if (u.row == v.row + 1 && v.col > u.col) return true;
    if (v.row == u.row + 1 && u.col > v.col) return true;
    return false;
}

int Diagram::box_index(const Box& b) const {
    auto it = std::find(boxes.begin(), boxes.end(), b);
    return it == boxes.end() ? -1 : static_cast<int>(it - boxes.begin());
}

Diagram build_diagram(const Composition& c) {
    check_composition(c);
    Diagram d;
    d.shape = c;
    const Int n = static_cast<Int>(c.size());
    Int maxrow = *std::max_element(c.begin(), c.end());
    for (Int r = 1; r <= maxrow; ++r)
        for (Int j = 1; j <= n; ++j)
            if (c[j - 1] >= r) d.boxes.push_back(Box{j, r});
    for (Int j = 1; j <= n; ++j) d.basement.push_back(Box{j, 0});

    d.earlier_attackers.resize(d.boxes.size());
    d.basement_labels_attacked.resize(d.boxes.size());
    for (std::size_t b = 0; b < d.boxes.size(); ++b) {
        for (std::size_t a = 0; a < b; ++a)
            if (attacks(d.boxes[a], d.boxes[b])) {
                d.earlier_attackers[b].push_back(static_cast<int>(a));
                d.attack_pairs.emplace_back(d.boxes[a], d.boxes[b]);
            }
        if (d.boxes[b].row == 1)
            for (Int j = d.boxes[b].col + 1; j <= n; ++j) {
                d.basement_labels_attacked[b].push_back(j);
                d.attack_pairs.emplace_back(Box{j, 0}, d.boxes[b]);
            }
    }
    return d;
}

} // namespace nsmac
