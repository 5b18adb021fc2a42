#include "nsmac/hull.hpp"

#include "nsmac/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace nsmac {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;
using boost::multiprecision::mpz_int;

// Reduced row echelon form in place; returns the pivot columns. Zero rows are
// dropped.
std::vector<std::size_t> rref(Mat& M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(M[p], M[r]);
        Rational pv = M[r][c];
        for (auto& v : M[r]) v /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (std::size_t j = 0; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    M.resize(pivots.size());
    return pivots;
}

std::size_t rank_of(Mat M) { return rref(M).size(); }

// Scale to the primitive integer vector with the same direction.
Vec primitive(const Vec& v) {
    mpz_int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<mpz_int> w(v.size());
    mpz_int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (l / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    Vec out(v.size(), Rational(0));
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(w[i] / g);
    return out;
}

struct Ray {
    Vec r;
    std::vector<std::uint64_t> tight;
};

bool tight_subset(const std::vector<std::uint64_t>& a,
                  const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w)
        if ((a[w] & ~b[w]) != 0) return false;
    return true;
}

// Extreme rays of {x : h_k . x >= 0 for all k} for a full-dimensional pointed
// cone, by incremental double description with the combinatorial adjacency
// test. Constraint insertion order is fixed, so the output is deterministic.
std::vector<Vec> cone_extreme_rays(const std::vector<Vec>& cons) {
    const std::size_t D = cons[0].size();
    const std::size_t K = cons.size();
    const std::size_t words = (K + 63) / 64;

    // greedy maximal independent subset for the initial simplicial cone
    std::vector<std::size_t> init;
    {
        Mat acc;
        for (std::size_t k = 0; k < K && init.size() < D; ++k) {
            Mat test = acc;
            test.push_back(cons[k]);
            if (rank_of(test) == init.size() + 1) {
                acc.push_back(cons[k]);
                init.push_back(k);
            }
        }
        if (init.size() != D)
            throw std::logic_error("cone_extreme_rays: constraints not full rank");
    }
    std::vector<char> is_init(K, 0);
    for (std::size_t k : init) is_init[k] = 1;

    // rays of the initial cone: columns of the inverse of the chosen rows
    std::vector<Ray> rays;
    {
        Mat aug(D, Vec(2 * D, Rational(0)));
        for (std::size_t i = 0; i < D; ++i) {
            for (std::size_t j = 0; j < D; ++j) aug[i][j] = cons[init[i]][j];
            aug[i][D + i] = 1;
        }
        rref(aug);
        for (std::size_t j = 0; j < D; ++j) {
            Ray ray;
            ray.r.resize(D);
            for (std::size_t i = 0; i < D; ++i) ray.r[i] = aug[i][D + j];
            ray.r = primitive(ray.r);
            ray.tight.assign(words, 0);
            for (std::size_t i = 0; i < D; ++i)
                if (i != j) ray.tight[init[i] / 64] |= 1ULL << (init[i] % 64);
            rays.push_back(std::move(ray));
        }
    }

    auto dot = [&](const Vec& a, const Vec& b) {
        Rational s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    };

    for (std::size_t k = 0; k < K; ++k) {
        if (is_init[k]) continue;
        std::vector<Rational> val(rays.size());
        bool any_minus = false;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(cons[k], rays[r].r);
            if (val[r] < 0) any_minus = true;
        }
        if (!any_minus) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0) rays[r].tight[k / 64] |= 1ULL << (k % 64);
            continue;
        }
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r)
            if (val[r] >= 0) {
                Ray kept = rays[r];
                if (val[r] == 0) kept.tight[k / 64] |= 1ULL << (k % 64);
                next.push_back(std::move(kept));
            }
        for (std::size_t p = 0; p < rays.size(); ++p) {
            if (val[p] <= 0) continue;
            for (std::size_t q = 0; q < rays.size(); ++q) {
                if (val[q] >= 0) continue;
                std::vector<std::uint64_t> common(words);
                for (std::size_t w = 0; w < words; ++w)
                    common[w] = rays[p].tight[w] & rays[q].tight[w];
                bool adjacent = true;
                for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (t == p || t == q) continue;
                    if (tight_subset(common, rays[t].tight)) adjacent = false;
                }
                if (!adjacent) continue;
                Ray nr;
                nr.r.resize(D);
                for (std::size_t i = 0; i < D; ++i)
                    nr.r[i] = val[p] * rays[q].r[i] - val[q] * rays[p].r[i];
                nr.r = primitive(nr.r);
                nr.tight = std::move(common);
                nr.tight[k / 64] |= 1ULL << (k % 64);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (auto& r : rays) out.push_back(std::move(r.r));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

LatticePolytope convex_hull(const PointSet& S_in) {
    if (S_in.empty()) throw std::invalid_argument("convex_hull: empty point set");
    PointSet S = S_in;
    canonicalize(S);
    const std::size_t n = S[0].size();
    for (const auto& p : S)
        if (p.size() != n) throw std::invalid_argument("convex_hull: ragged point set");

    LatticePolytope P;
    P.points = S;
    P.base_point = S[0];

    // affine hull of S: row-reduce the directions from the base point
    Mat dirs;
    for (std::size_t k = 1; k < S.size(); ++k) {
        Vec d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = S[k][i] - S[0][i];
        dirs.push_back(std::move(d));
    }
    std::vector<std::size_t> pivots = rref(dirs);
    const std::size_t d = pivots.size();
    P.dim = static_cast<int>(d);
    for (const auto& row : dirs) {
        Vec pr = primitive(row);
        WeightVector b(n);
        for (std::size_t i = 0; i < n; ++i) {
            // primitive integer entries; numerators fit the lattice type at
            // desk scale, and the denominator is 1 by construction
            b[i] = static_cast<Int>(numerator(pr[i]).convert_to<long long>());
        }
        P.affine_basis.push_back(std::move(b));
    }
    if (d == 0) {
        P.vertices = S;
        return P;
    }

    // project to pivot coordinates; points there affinely span R^d
    std::vector<Vec> proj(S.size(), Vec(d));
    for (std::size_t k = 0; k < S.size(); ++k)
        for (std::size_t t = 0; t < d; ++t) proj[k][t] = S[k][pivots[t]];

    // facets of conv(proj) = extreme rays of {(a0,a) : a0 + a.y >= 0 for all y}
    std::vector<Vec> cons(S.size(), Vec(d + 1));
    for (std::size_t k = 0; k < S.size(); ++k) {
        cons[k][0] = 1;
        for (std::size_t t = 0; t < d; ++t) cons[k][t + 1] = proj[k][t];
    }
    std::vector<Vec> rays = cone_extreme_rays(cons);

    struct ProjFacet {
        Vec normal; // g . y <= offset
        Rational offset;
    };
    std::vector<ProjFacet> pf;
    for (const auto& r : rays) {
        ProjFacet f;
        f.offset = r[0];
        f.normal.assign(r.begin() + 1, r.end());
        bool zero = std::all_of(f.normal.begin(), f.normal.end(),
                                [](const Rational& x) { return x == 0; });
        if (zero)
            throw std::logic_error("convex_hull: trivial dual ray (unbounded?)");
        for (auto& x : f.normal) x = -x;
        pf.push_back(std::move(f));
    }
    std::sort(pf.begin(), pf.end(), [](const ProjFacet& a, const ProjFacet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });

    // active facets per point; vertices are points whose active normals span
    std::vector<std::vector<std::size_t>> active(S.size());
    for (std::size_t k = 0; k < S.size(); ++k)
        for (std::size_t f = 0; f < pf.size(); ++f) {
            Rational v = 0;
            for (std::size_t t = 0; t < d; ++t) v += pf[f].normal[t] * proj[k][t];
            if (v > pf[f].offset)
                throw std::logic_error("convex_hull: facet violated by input point");
            if (v == pf[f].offset) active[k].push_back(f);
        }
    std::vector<std::size_t> vertex_ids;
    for (std::size_t k = 0; k < S.size(); ++k) {
        if (active[k].size() < d) continue;
        Mat M;
        for (std::size_t f : active[k]) M.push_back(pf[f].normal);
        if (rank_of(std::move(M)) == d) vertex_ids.push_back(k);
    }
    for (std::size_t k : vertex_ids) P.vertices.push_back(S[k]); // stays sorted

    // edges: vertex pairs whose common active facets cut down to a line
    for (std::size_t a = 0; a < vertex_ids.size(); ++a)
        for (std::size_t b = a + 1; b < vertex_ids.size(); ++b) {
            std::vector<std::size_t> common;
            std::set_intersection(active[vertex_ids[a]].begin(),
                                  active[vertex_ids[a]].end(),
                                  active[vertex_ids[b]].begin(),
                                  active[vertex_ids[b]].end(),
                                  std::back_inserter(common));
            if (common.size() + 1 < d) continue;
            Mat M;
            for (std::size_t f : common) M.push_back(pf[f].normal);
            if (rank_of(std::move(M)) == d - 1)
                P.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }

    // lift facet normals to ambient coordinates on the pivot axes
    for (const auto& f : pf) {
        FacetInequality amb;
        amb.normal.assign(n, Rational(0));
        for (std::size_t t = 0; t < d; ++t) amb.normal[pivots[t]] = f.normal[t];
        amb.offset = f.offset;
        P.facets.push_back(std::move(amb));
    }
    return P;
}

bool contains_point(const PointSet& S, const std::vector<Rational>& x) {
    return in_convex_hull(S, x);
}

bool contains_point(const LatticePolytope& P, const std::vector<Rational>& x) {
    return in_convex_hull(P.vertices, x);
}

PointSet lattice_points(const PointSet& S_in) {
    if (S_in.empty()) throw std::invalid_argument("lattice_points: empty point set");
    PointSet S = S_in;
    canonicalize(S);
    const std::size_t n = S[0].size();
    const Int total = weight_sum(S[0]);
    for (const auto& p : S)
        if (weight_sum(p) != total)
            throw std::invalid_argument("lattice_points: points must have constant sum");

    WeightVector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = hi[i] = S[0][i];
        for (const auto& p : S) {
            lo[i] = std::min(lo[i], p[i]);
            hi[i] = std::max(hi[i], p[i]);
        }
    }
    std::vector<Int> lo_suffix(n + 1, 0), hi_suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) {
        lo_suffix[i] = lo_suffix[i + 1] + lo[i];
        hi_suffix[i] = hi_suffix[i + 1] + hi[i];
    }

    PointSet out;
    WeightVector cur(n);
    auto rec = [&](auto&& self, std::size_t i, Int rem) -> void {
        if (i == n) {
            if (rem == 0 && in_convex_hull(S, to_rational(cur))) out.push_back(cur);
            return;
        }
        for (Int v = lo[i]; v <= hi[i]; ++v) {
            Int r = rem - v;
            if (r < lo_suffix[i + 1] || r > hi_suffix[i + 1]) continue;
            cur[i] = v;
            self(self, i + 1, r);
        }
    };
    rec(rec, 0, total);
    canonicalize(out);
    return out;
}

LatticePolytope translate(const LatticePolytope& P, const WeightVector& shift) {
    if (shift.size() != P.base_point.size())
        throw std::invalid_argument("translate: dimension mismatch");
    LatticePolytope Q = P;
    Q.points = translate(P.points, shift);
    Q.vertices = translate(P.vertices, shift);
    Q.base_point = add(P.base_point, shift);
    for (auto& f : Q.facets) {
        Rational delta = 0;
        for (std::size_t i = 0; i < shift.size(); ++i)
            delta += f.normal[i] * shift[i];
        f.offset += delta;
    }
    return Q;
}

} // namespace nsmac
