#include "nsmac/weight.hpp"

#include <algorithm>

namespace nsmac {

void check_composition(const WeightVector& v) {
    if (v.empty())
        throw std::invalid_argument("composition must have length >= 1");
    for (Int x : v)
        if (x < 0)
            throw std::invalid_argument("composition entries must be non-negative");
}

void check_same_length(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight vectors of different lengths");
}

WeightVector simple_transposition(const WeightVector& v, int i) {
    if (i < 1 || static_cast<std::size_t>(i) + 1 > v.size())
        throw std::invalid_argument("simple_transposition: index out of range");
    WeightVector w = v;
    std::swap(w[i - 1], w[i]);
    return w;
}

WeightVector transposition(const WeightVector& v, int i, int j) {
    if (i < 1 || j <= i || static_cast<std::size_t>(j) > v.size())
        throw std::invalid_argument("transposition: need 1 <= i < j <= n");
    WeightVector w = v;
    std::swap(w[i - 1], w[j - 1]);
    return w;
}

WeightVector pi_op(const WeightVector& v) {
    if (v.empty()) throw std::invalid_argument("pi_op: empty vector");
    WeightVector w(v.size());
    w[0] = v.back() + 1;
    std::copy(v.begin(), v.end() - 1, w.begin() + 1);
    return w;
}

WeightVector rotate_right(const WeightVector& v) {
    if (v.empty()) throw std::invalid_argument("rotate_right: empty vector");
    WeightVector w(v.size());
    w[0] = v.back();
    std::copy(v.begin(), v.end() - 1, w.begin() + 1);
    return w;
}

std::pair<Int, Composition> normalize_weight(const WeightVector& v) {
    if (v.empty()) throw std::invalid_argument("normalize_weight: empty vector");
    Int m = *std::min_element(v.begin(), v.end());
    Composition c(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) c[k] = v[k] - m;
    return {m, c};
}

WeightVector unit_vector(std::size_t n, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > n)
        throw std::invalid_argument("unit_vector: index out of range");
    WeightVector e(n, 0);
    e[i - 1] = 1;
    return e;
}

WeightVector add(const WeightVector& a, const WeightVector& b) {
    check_same_length(a, b);
    WeightVector c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] + b[k];
    return c;
}

WeightVector sub(const WeightVector& a, const WeightVector& b) {
    check_same_length(a, b);
    WeightVector c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
    return c;
}

void canonicalize(PointSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool point_set_contains(const PointSet& s, const WeightVector& v) {
    return std::binary_search(s.begin(), s.end(), v);
}

PointSet translate(const PointSet& s, const WeightVector& shift) {
    PointSet out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(add(p, shift));
    canonicalize(out);
    return out;
}

PointSet apply_simple_transposition(const PointSet& s, int i) {
    PointSet out;
    out.reserve(s.size());
    for (const auto& p : s) out.push_back(simple_transposition(p, i));
    canonicalize(out);
    return out;
}

} // namespace nsmac
