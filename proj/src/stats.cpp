#include "nsmac/stats.hpp"

namespace nsmac {

namespace {

void check_box(const Composition& shape, const Box& u, const char* who) {
    if (u.col < 1 || static_cast<std::size_t>(u.col) > shape.size() ||
        u.row < 1 || u.row > shape[u.col - 1])
        throw std::invalid_argument(std::string(who) + ": box outside the diagram");
}

} // namespace

Int HhlStatistics::leg(const Composition& shape, const Box& u) const {
    check_composition(shape);
    check_box(shape, u, "leg");
    return shape[u.col - 1] - u.row;
}

Int HhlStatistics::arm(const Composition& shape, const Box& u) const {
    check_composition(shape);
    check_box(shape, u, "arm");
    const Int n = static_cast<Int>(shape.size());
    const Int h = shape[u.col - 1];
    Int a = 0;
    for (Int k = 1; k < u.col; ++k)
        if (u.row <= shape[k - 1] && shape[k - 1] <= h) ++a;
    for (Int k = u.col + 1; k <= n; ++k)
        if (u.row - 1 <= shape[k - 1] && shape[k - 1] < h) ++a;
    return a;
}

Int HhlStatistics::maj(const Filling& f) const {
    Diagram d = build_diagram(f.shape);
    if (f.labels.size() != d.boxes.size())
        throw std::invalid_argument("maj: label count does not match diagram");
    Int total = 0;
    for (std::size_t k = 0; k < d.boxes.size(); ++k) {
        const Box& u = d.boxes[k];
        Int below = u.row == 1 ? u.col
                               : f.labels[d.box_index(Box{u.col, u.row - 1})];
        if (f.labels[k] > below) total += leg(f.shape, u) + 1;
    }
    return total;
}

Int HhlStatistics::coinv(const Filling& f) const {
    if (!is_nonattacking(f))
        throw std::invalid_argument("coinv: defined on non-attacking fillings");
    return 0;
}

const StatisticsProvider& hhl_statistics() {
    static const HhlStatistics instance;
    return instance;
}

} // namespace nsmac
