#include "nsmac/polynomial.hpp"

namespace nsmac {

void SparsePolynomial::add_term(const WeightVector& expo, const Rational& coef) {
    if (static_cast<int>(expo.size()) != nvars)
        throw std::invalid_argument("add_term: exponent length mismatch");
    if (coef == 0) return;
    auto [it, inserted] = terms.emplace(expo, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms.erase(it);
    }
}

QTParams::QTParams(Rational q_, Rational t_) : q(std::move(q_)), t(std::move(t_)) {
    if (!(q > 0 && q < 1 && t > 0 && t < 1))
        throw std::invalid_argument("QTParams: require 0 < q < 1 and 0 < t < 1");
}

SparsePolynomial psi_op(const SparsePolynomial& p, const Rational& q) {
    if (q == 0) throw std::invalid_argument("psi_op: q must be nonzero");
    SparsePolynomial out;
    out.nvars = p.nvars;
    for (const auto& [expo, coef] : p.terms)
        out.add_term(rotate_right(expo), coef * rational_pow(q, -expo.back()));
    return out;
}

SparsePolynomial scale(const SparsePolynomial& p, const Rational& c) {
    SparsePolynomial out;
    out.nvars = p.nvars;
    if (c == 0) return out;
    for (const auto& [expo, coef] : p.terms) out.terms.emplace(expo, coef * c);
    return out;
}

SparsePolynomial multiply_monomial(const SparsePolynomial& p, const WeightVector& expo) {
    if (static_cast<int>(expo.size()) != p.nvars)
        throw std::invalid_argument("multiply_monomial: exponent length mismatch");
    SparsePolynomial out;
    out.nvars = p.nvars;
    for (const auto& [e, coef] : p.terms) out.terms.emplace(add(e, expo), coef);
    return out;
}

} // namespace nsmac
