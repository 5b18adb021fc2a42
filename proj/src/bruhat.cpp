#include "nsmac/bruhat.hpp"

#include "nsmac/hull.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nsmac {

PointSet lower_moves(const WeightVector& v) {
    const int n = static_cast<int>(v.size());
    PointSet out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (v[i] < v[j]) {
                WeightVector w = v;
                std::swap(w[i], w[j]);
                out.push_back(std::move(w));
            }
            if (v[i] > v[j] + 1) {
                WeightVector w = v;
                w[i] = v[j] + 1;
                w[j] = v[i] - 1;
                out.push_back(std::move(w));
            }
        }
    canonicalize(out);
    return out;
}

BruhatIdeal ideal(const WeightVector& mu) {
    if (mu.empty()) throw std::invalid_argument("ideal: empty vector");
    auto [m, c] = normalize_weight(mu);
    WeightVector shift(mu.size(), m);

    BruhatIdeal out;
    out.top = mu;
    std::set<WeightVector> seen{c};
    std::deque<WeightVector> frontier{c};
    std::set<std::pair<WeightVector, WeightVector>> edges;
    while (!frontier.empty()) {
        WeightVector v = frontier.front();
        frontier.pop_front();
        for (const auto& w : lower_moves(v)) {
            edges.emplace(add(v, shift), add(w, shift));
            if (seen.insert(w).second) frontier.push_back(w);
        }
    }
    for (const auto& v : seen) out.elements.push_back(add(v, shift));
    canonicalize(out.elements);
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

bool leq(const WeightVector& lambda, const WeightVector& mu) {
    check_same_length(lambda, mu);
    if (weight_sum(lambda) != weight_sum(mu)) return false;
    return point_set_contains(ideal(mu).elements, lambda);
}

bool verify_conjecture38(const Composition& mu) {
    check_composition(mu);
    BruhatIdeal I = ideal(mu);
    for (const auto& p : lattice_points(I.elements)) {
        if (std::any_of(p.begin(), p.end(), [](Int x) { return x < 0; })) continue;
        if (!point_set_contains(I.elements, p)) return false;
    }
    return true;
}

} // namespace nsmac
