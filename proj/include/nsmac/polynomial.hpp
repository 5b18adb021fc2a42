#pragma once

#include "nsmac/rational.hpp"
#include "nsmac/weight.hpp"

#include <map>

namespace nsmac {

// Laurent polynomial with exact rational coefficients: exponent vectors may
// be negative; zero coefficients are never stored, so equality is map
// equality.
struct SparsePolynomial {
    int nvars = 0;
    std::map<WeightVector, Rational> terms;

    void add_term(const WeightVector& expo, const Rational& coef);
    bool operator==(const SparsePolynomial&) const = default;
};

// Specialization point for (q,t); the open box 0 < q,t < 1 keeps every
// coefficient denominator nonzero and every term strictly positive.
struct QTParams {
    Rational q;
    Rational t;
    QTParams(Rational q_, Rational t_);
};

// psi: x^a -> q^{-a_n} x^{rotate_right(a)}, extended linearly.
SparsePolynomial psi_op(const SparsePolynomial& p, const Rational& q);

SparsePolynomial scale(const SparsePolynomial& p, const Rational& c);
SparsePolynomial multiply_monomial(const SparsePolynomial& p, const WeightVector& expo);

} // namespace nsmac
