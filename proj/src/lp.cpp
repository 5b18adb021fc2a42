#include "nsmac/lp.hpp"

#include <stdexcept>

namespace nsmac {

bool lp_equality_feasible(std::vector<std::vector<Rational>> A,
                          std::vector<Rational> b) {
    const std::size_t m = A.size();
    if (b.size() != m) throw std::invalid_argument("lp: row count mismatch");
    const std::size_t N = m == 0 ? 0 : A[0].size();
    for (const auto& row : A)
        if (row.size() != N) throw std::invalid_argument("lp: ragged matrix");
    if (m == 0) return true;

    for (std::size_t i = 0; i < m; ++i)
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }

    // Tableau [A | I | b] with artificial basis; minimize the sum of
    // artificials. obj holds reduced costs; artificial columns may not
    // re-enter the basis.
    const std::size_t cols = N + m;
    std::vector<std::vector<Rational>> T(m, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < N; ++j) T[i][j] = A[i][j];
        T[i][N + i] = 1;
        T[i][cols] = b[i];
    }
    std::vector<std::size_t> basis(m);
    std::vector<Rational> obj(cols + 1);
    for (std::size_t i = 0; i < m; ++i) basis[i] = N + i;
    for (std::size_t j = 0; j < N; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += T[i][j];
        obj[j] = -s;
    }
    {
        Rational s = 0;
        for (std::size_t i = 0; i < m; ++i) s += b[i];
        obj[cols] = -s; // objective value is -obj[cols]
    }

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < N; ++j) // Bland: lowest eligible index
            if (obj[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rational ratio = T[i][cols] / T[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m)
            throw std::logic_error("lp: phase-one objective unbounded");
        Rational pv = T[leave][enter];
        for (auto& v : T[leave]) v /= pv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rational f = T[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) T[i][j] -= f * T[leave][j];
        }
        if (obj[enter] != 0) {
            Rational f = obj[enter];
            for (std::size_t j = 0; j <= cols; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[cols] == 0;
}

bool in_convex_hull(const PointSet& points, const std::vector<Rational>& x) {
    if (points.empty()) throw std::invalid_argument("in_convex_hull: empty point set");
    const std::size_t n = points[0].size();
    if (x.size() != n) throw std::invalid_argument("in_convex_hull: dimension mismatch");
    std::vector<std::vector<Rational>> A(n + 1,
                                         std::vector<Rational>(points.size()));
    std::vector<Rational> b(n + 1);
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (points[k].size() != n)
            throw std::invalid_argument("in_convex_hull: ragged point set");
        A[0][k] = 1;
        for (std::size_t i = 0; i < n; ++i) A[i + 1][k] = points[k][i];
    }
    b[0] = 1;
    for (std::size_t i = 0; i < n; ++i) b[i + 1] = x[i];
    return lp_equality_feasible(std::move(A), std::move(b));
}

} // namespace nsmac
