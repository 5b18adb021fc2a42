#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsmac/diagram.hpp"
#include "nsmac/weight.hpp"

#include <random>
#include <set>

using namespace nsmac;

TEST_CASE("simple transposition") {
    CHECK(simple_transposition({0, 2, 0}, 1) == WeightVector{2, 0, 0});
    CHECK(simple_transposition({1, 0, 1}, 2) == WeightVector{1, 1, 0});
    CHECK(simple_transposition(simple_transposition({5, 7}, 1), 1) == WeightVector{5, 7});
    CHECK_THROWS_AS(simple_transposition({1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(simple_transposition({1, 2}, 0), std::invalid_argument);
}

TEST_CASE("transposition") {
    CHECK(transposition({0, 0, 2}, 1, 3) == WeightVector{2, 0, 0});
    CHECK(transposition({0, 0, 2}, 2, 3) == WeightVector{0, 2, 0});
    CHECK(transposition({4, 9, 1}, 1, 2) == simple_transposition({4, 9, 1}, 1));
    CHECK_THROWS_AS(transposition({1, 2, 3}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(transposition({1, 2, 3}, 3, 1), std::invalid_argument);
}

TEST_CASE("pi operator") {
    CHECK(pi_op({0, 2, 0}) == WeightVector{1, 0, 2});
    CHECK(pi_op({0, 0, 0}) == WeightVector{1, 0, 0});
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(1, 6), val(-4, 4);
        WeightVector v(len(rng));
        for (auto& x : v) x = val(rng);
        WeightVector w = pi_op(v);
        CHECK(w[0] >= v.back() + 1);
        CHECK(weight_sum(w) == weight_sum(v) + 1);
    }
    // restricted to compositions: injective, never surjective (first entry >= 1)
    std::set<WeightVector> images;
    Composition c(3, 0);
    for (c[0] = 0; c[0] <= 2; ++c[0])
        for (c[1] = 0; c[1] <= 2; ++c[1])
            for (c[2] = 0; c[2] <= 2; ++c[2]) {
                WeightVector w = pi_op(c);
                CHECK(w[0] >= 1);
                CHECK(images.insert(w).second);
            }
}

TEST_CASE("normalize weight") {
    auto [m1, c1] = normalize_weight({-1, 1, 0});
    CHECK(m1 == -1);
    CHECK(c1 == Composition{0, 2, 1});
    auto [m2, c2] = normalize_weight({3, 3, 3});
    CHECK(m2 == 3);
    CHECK(c2 == Composition{0, 0, 0});
    auto [m3, c3] = normalize_weight({0, 2, 0});
    CHECK(m3 == 0);
    CHECK(c3 == Composition{0, 2, 0});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(1, 6), val(-5, 5);
        WeightVector v(len(rng));
        for (auto& x : v) x = val(rng);
        auto [m, c] = normalize_weight(v);
        CHECK(*std::min_element(c.begin(), c.end()) == 0);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == m + c[i]);
    }
}

namespace {

// independent oracle: quadratic scan over all augmented cells
std::set<std::pair<Box, Box>> brute_force_attack_pairs(const Composition& c) {
    std::vector<Box> cells;
    for (Int j = 1; j <= static_cast<Int>(c.size()); ++j) {
        cells.push_back(Box{j, 0});
        for (Int r = 1; r <= c[j - 1]; ++r) cells.push_back(Box{j, r});
    }
    std::set<std::pair<Box, Box>> pairs;
    for (const Box& u : cells)
        for (const Box& v : cells) {
            if (u.row == 0 && v.row == 0) continue; // basement-basement not stored
            if (attacks(u, v)) pairs.insert(std::minmax(u, v));
        }
    return pairs;
}

std::set<std::pair<Box, Box>> stored_pairs(const Diagram& d) {
    std::set<std::pair<Box, Box>> pairs;
    for (const auto& [u, v] : d.attack_pairs) pairs.insert(std::minmax(u, v));
    return pairs;
}

} // namespace

TEST_CASE("diagram for (1,0,2)") {
    Diagram d = build_diagram({1, 0, 2});
    CHECK(d.boxes == std::vector<Box>{{1, 1}, {3, 1}, {3, 2}});
    auto pairs = stored_pairs(d);
    // box (1,1) attacks the basement boxes in columns 2 and 3
    CHECK(pairs.count(std::minmax(Box{1, 1}, Box{2, 0})));
    CHECK(pairs.count(std::minmax(Box{1, 1}, Box{3, 0})));
    // (3,1) attacks (1,1) in the same row
    CHECK(pairs.count(std::minmax(Box{1, 1}, Box{3, 1})));
    // (3,2) attacks nothing
    for (const auto& p : pairs) {
        CHECK(p.first != Box{3, 2});
        CHECK(p.second != Box{3, 2});
    }
    CHECK(pairs == brute_force_attack_pairs({1, 0, 2}));
}

TEST_CASE("diagram for (0,0,0) and (2,2)") {
    Diagram empty = build_diagram({0, 0, 0});
    CHECK(empty.boxes.empty());
    CHECK(empty.attack_pairs.empty());

    Diagram d = build_diagram({2, 2});
    auto pairs = stored_pairs(d);
    CHECK(pairs.count(std::minmax(Box{1, 1}, Box{2, 1}))); // same row
    CHECK(pairs.count(std::minmax(Box{2, 1}, Box{1, 2}))); // lower strictly right
    CHECK(!pairs.count(std::minmax(Box{1, 1}, Box{1, 2}))); // same column
    CHECK(pairs == brute_force_attack_pairs({2, 2}));
}

TEST_CASE("attack pairs match the brute-force scan") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(1, 5), height(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        Composition c(len(rng));
        for (auto& x : c) x = height(rng);
        Diagram d = build_diagram(c);
        CHECK(stored_pairs(d) == brute_force_attack_pairs(c));
        for (const auto& [u, v] : d.attack_pairs) CHECK(u.col != v.col);
    }
}
