#include "nsmac/macdonald.hpp"

#include "nsmac/filling.hpp"

#include <algorithm>

namespace nsmac {

namespace {

bool is_zero(const Composition& c) {
    return std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; });
}

int first_nonzero(const Composition& c) { // 1-based
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i) + 1;
    return 0;
}

// The reduction chain from mu down to 0, returned in replay order (from 0 up
// to mu). Rotate steps peel pi^{-1}; ShiftColumn(l) steps move the leading
// column from l-1 back to l.
std::vector<CertificateStep> reduction_steps(const Composition& mu) {
    std::vector<CertificateStep> rev;
    Composition v = mu;
    while (!is_zero(v)) {
        if (v[0] > 0) {
            rev.push_back({CertificateStep::Kind::Rotate, 0});
            Composition w(v.begin() + 1, v.end());
            w.push_back(v[0] - 1);
            v = std::move(w);
        } else {
            int l = first_nonzero(v);
            rev.push_back({CertificateStep::Kind::ShiftColumn, l});
            std::swap(v[l - 2], v[l - 1]); // v[l-2] == 0
        }
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

PointSet rotate_step(const PointSet& S) {
    PointSet out;
    out.reserve(S.size());
    const std::size_t n = S.empty() ? 0 : S[0].size();
    WeightVector e1 = unit_vector(n, 1);
    for (const auto& p : S) out.push_back(add(rotate_right(p), e1));
    canonicalize(out);
    return out;
}

} // namespace

PointSet support_by_recursion(const Composition& mu) {
    check_composition(mu);
    PointSet S{WeightVector(mu.size(), 0)};
    for (const auto& step : reduction_steps(mu)) {
        if (step.kind == CertificateStep::Kind::Rotate) {
            S = rotate_step(S);
        } else {
            PointSet flipped = apply_simple_transposition(S, step.column - 1);
            S.insert(S.end(), flipped.begin(), flipped.end());
            canonicalize(S);
        }
    }
    return S;
}

PointSet replay_certificate(const MConvexCertificate& cert) {
    PointSet S{WeightVector(cert.target.size(), 0)};
    if (!is_mconvex_exchange(S))
        throw hypothesis_error("certificate: base set fails the exchange axiom",
                               S.front());
    for (const auto& step : cert.steps) {
        if (step.kind == CertificateStep::Kind::Rotate)
            S = rotate_step(S);
        else
            S = union_reflection(S, step.column, step.column - 1);
        if (!is_mconvex_exchange(S))
            throw hypothesis_error("certificate: step output fails the exchange axiom",
                                   S.front());
    }
    return S;
}

MConvexCertificate certify_mconvex(const Composition& mu) {
    check_composition(mu);
    MConvexCertificate cert;
    cert.target = mu;
    cert.steps = reduction_steps(mu);
    cert.support = replay_certificate(cert);
    return cert;
}

LatticePolytope newton_polytope(const WeightVector& mu) {
    auto [m, c] = normalize_weight(mu);
    LatticePolytope P = convex_hull(support_by_recursion(c));
    if (m == 0) return P;
    return translate(P, WeightVector(mu.size(), m));
}

LatticePolytope moment_polytope(const WeightVector& mu) {
    return convex_hull(ideal(mu).elements);
}

SparsePolynomial coefficients(const Composition& mu, const QTParams& params,
                              const StatisticsProvider& stats) {
    check_composition(mu);
    Diagram d = build_diagram(mu);
    const Rational& q = params.q;
    const Rational& t = params.t;

    // per-box factor for a label change across d(u), fixed by the shape
    std::vector<Rational> change_factor(d.boxes.size());
    std::vector<int> below_index(d.boxes.size(), -1);
    for (std::size_t k = 0; k < d.boxes.size(); ++k) {
        const Box& u = d.boxes[k];
        Rational denom = 1 - rational_pow(q, stats.leg(mu, u) + 1) *
                                 rational_pow(t, stats.arm(mu, u) + 1);
        if (denom == 0)
            throw std::invalid_argument("coefficients: vanishing factor denominator");
        change_factor[k] = (1 - t) / denom;
        if (u.row > 1) below_index[k] = d.box_index(Box{u.col, u.row - 1});
    }

    SparsePolynomial E;
    E.nvars = static_cast<int>(mu.size());
    for (const Filling& f : enumerate_nonattacking(mu)) {
        Rational w = rational_pow(q, stats.maj(f)) * rational_pow(t, stats.coinv(f));
        for (std::size_t k = 0; k < d.boxes.size(); ++k) {
            Int below = below_index[k] >= 0 ? f.labels[below_index[k]]
                                            : d.boxes[k].col;
            if (f.labels[k] != below) w *= change_factor[k];
        }
        E.add_term(multiplicity(f), w);
    }
    return E;
}

SparsePolynomial coefficients_general(const WeightVector& mu, const QTParams& params,
                                      const StatisticsProvider& stats) {
    auto [m, c] = normalize_weight(mu);
    SparsePolynomial E = coefficients(c, params, stats);
    if (m == 0) return E;
    return multiply_monomial(E, WeightVector(mu.size(), m));
}

bool verify_knop_sahi(const Composition& mu, const QTParams& params,
                      const StatisticsProvider& stats) {
    check_composition(mu);
    SparsePolynomial lhs = coefficients(pi_op(mu), params, stats);
    SparsePolynomial rhs = multiply_monomial(psi_op(coefficients(mu, params, stats),
                                                    params.q),
                                             unit_vector(mu.size(), 1));
    rhs = scale(rhs, rational_pow(params.q, mu.back()));
    return lhs == rhs;
}

} // namespace nsmac
