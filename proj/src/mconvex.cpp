#include "nsmac/mconvex.hpp"

#include <algorithm>

namespace nsmac {

namespace {

void check_nonempty(const PointSet& S, const char* who) {
    if (S.empty()) throw std::invalid_argument(std::string(who) + ": empty set rejected");
}

bool constant_sum(const PointSet& S) {
    Int s = weight_sum(S[0]);
    return std::all_of(S.begin(), S.end(),
                       [&](const WeightVector& p) { return weight_sum(p) == s; });
}

} // namespace

bool is_mconvex_exchange(const PointSet& S_in) {
    check_nonempty(S_in, "is_mconvex_exchange");
    PointSet S = S_in;
    canonicalize(S);
    if (!constant_sum(S)) return false;
    const std::size_t n = S[0].size();
    for (const auto& x : S)
        for (const auto& y : S) {
            for (std::size_t i = 0; i < n; ++i) {
                if (x[i] <= y[i]) continue;
                bool found = false;
                for (std::size_t j = 0; j < n && !found; ++j) {
                    if (x[j] >= y[j]) continue;
                    WeightVector z = x;
                    --z[i];
                    ++z[j];
                    found = point_set_contains(S, z);
                }
                if (!found) return false;
            }
        }
    return true;
}

PointSet minkowski_root_segment(const PointSet& S_in, int i, int j) {
    check_nonempty(S_in, "minkowski_root_segment");
    if (i == j) throw std::invalid_argument("minkowski_root_segment: i == j");
    PointSet S = S_in;
    canonicalize(S);
    const std::size_t n = S[0].size();
    WeightVector root = sub(unit_vector(n, i), unit_vector(n, j));
    PointSet out = S;
    for (const auto& p : S) out.push_back(add(p, root));
    canonicalize(out);
    return out;
}

PointSet union_reflection(const PointSet& S_in, int i, int j) {
    check_nonempty(S_in, "union_reflection");
    if (i == j) throw std::invalid_argument("union_reflection: i == j");
    PointSet S = S_in;
    canonicalize(S);
    if (!is_mconvex_exchange(S))
        throw std::invalid_argument("union_reflection: input set is not M-convex");
    const std::size_t n = S[0].size();
    const int lo = std::min(i, j), hi = std::max(i, j);
    WeightVector root = sub(unit_vector(n, i), unit_vector(n, j));
    PointSet shifted = translate(S, root);
    PointSet reflected;
    reflected.reserve(S.size());
    for (const auto& p : S) reflected.push_back(transposition(p, lo, hi));
    canonicalize(reflected);
    for (const auto& p : reflected)
        if (!point_set_contains(S, p) && !point_set_contains(shifted, p))
            throw hypothesis_error(
                "union_reflection: reflected point escapes S union (S + e_i - e_j)", p);
    PointSet out = S;
    out.insert(out.end(), reflected.begin(), reflected.end());
    canonicalize(out);
    return out;
}

bool is_saturated(const PointSet& S_in) {
    check_nonempty(S_in, "is_saturated");
    PointSet S = S_in;
    canonicalize(S);
    return lattice_points(S) == S;
}

bool is_generalized_permutahedron(const LatticePolytope& P) {
    for (const auto& [a, b] : P.edges) {
        WeightVector dir = sub(P.vertices[b], P.vertices[a]);
        int nonzero = 0;
        Int mag = 0;
        for (Int x : dir)
            if (x != 0) {
                ++nonzero;
                mag += x;
            }
        if (nonzero != 2 || mag != 0) return false;
    }
    return true;
}

bool is_mconvex_geometric(const PointSet& S_in) {
    check_nonempty(S_in, "is_mconvex_geometric");
    PointSet S = S_in;
    canonicalize(S);
    if (!constant_sum(S)) return false;
    return is_saturated(S) && is_generalized_permutahedron(convex_hull(S));
}

SupportFunctionProfile support_function(const PointSet& S_in) {
    check_nonempty(S_in, "support_function");
    PointSet S = S_in;
    canonicalize(S);
    const std::size_t n = S[0].size();
    if (n > 20)
        throw std::invalid_argument("support_function: n > 20 (2^n subsets)");
    if (!constant_sum(S))
        throw std::invalid_argument("support_function: points must have constant sum");
    SupportFunctionProfile f;
    f.n = static_cast<int>(n);
    f.values.assign(std::size_t(1) << n, 0);
    for (std::size_t mask = 1; mask < f.values.size(); ++mask) {
        bool first = true;
        for (const auto& p : S) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) s += p[i];
            if (first || s > f.values[mask]) f.values[mask] = s;
            first = false;
        }
    }
    return f;
}

bool is_submodular(const SupportFunctionProfile& f) {
    const std::size_t full = f.values.size();
    auto val = [&](std::size_t mask) { return mask == 0 ? Int(0) : f.values[mask]; };
    for (std::size_t a = 1; a < full; ++a)
        for (std::size_t b = a + 1; b < full; ++b)
            if (val(a) + val(b) < val(a | b) + val(a & b)) return false;
    return true;
}

} // namespace nsmac
