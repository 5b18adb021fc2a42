#pragma once

#include "nsmac/bruhat.hpp"
#include "nsmac/hull.hpp"
#include "nsmac/mconvex.hpp"
#include "nsmac/polynomial.hpp"
#include "nsmac/stats.hpp"

namespace nsmac {

// Support of E_mu by the structural recursion, never enumerating fillings:
//   mu = 0                  -> {0}
//   mu_1 > 0                -> e_1 + rotate_right(support(mu_2..mu_n, mu_1-1))
//   first nonzero at l > 1  -> S union s_{l-1}(S), S = support(column l moved
//                              to l-1)
PointSet support_by_recursion(const Composition& mu);

struct CertificateStep {
    enum class Kind { Rotate, ShiftColumn };
    Kind kind = Kind::Rotate;
    int column = 0; // for ShiftColumn: the column index l the height moves into
    bool operator==(const CertificateStep&) const = default;
};

// Replayable construction of supp(E_mu) from {0}: each Rotate maps S to
// e_1 + rotate_right(S); each ShiftColumn(l) applies union_reflection at
// (l, l-1), whose hypothesis is verified during replay. Every intermediate
// set is checked against the exchange axiom.
struct MConvexCertificate {
    Composition target;
    std::vector<CertificateStep> steps;
    PointSet support; // the replayed final support
};

MConvexCertificate certify_mconvex(const Composition& mu);

// Re-run a certificate's steps from {0}, re-verifying every hypothesis;
// returns the reconstructed support.
PointSet replay_certificate(const MConvexCertificate& cert);

// conv(supp(E_mu)); general weights route through the (m,...,m) shift.
LatticePolytope newton_polytope(const WeightVector& mu);

// conv(lambda : lambda <= mu). Equals newton_polytope(mu) as a vertex set;
// the suites assert that identity rather than this function assuming it.
LatticePolytope moment_polytope(const WeightVector& mu);

// Exact-rational coefficient expansion at specialized (q,t): sums over the
// non-attacking fillings the weight
//   x^{mult} q^{maj} t^{coinv} prod_{boxes with label != label below}
//     (1-t) / (1 - q^{leg+1} t^{arm+1}).
SparsePolynomial coefficients(const Composition& mu, const QTParams& params,
                              const StatisticsProvider& stats = hhl_statistics());

// (x_1...x_n)^m E_{mu'} for general mu via normalize_weight.
SparsePolynomial coefficients_general(const WeightVector& mu, const QTParams& params,
                                      const StatisticsProvider& stats = hhl_statistics());

// E_{pi(mu)} == q^{mu_n} x_1 psi(E_mu), both sides expanded independently.
bool verify_knop_sahi(const Composition& mu, const QTParams& params,
                      const StatisticsProvider& stats = hhl_statistics());

} // namespace nsmac
