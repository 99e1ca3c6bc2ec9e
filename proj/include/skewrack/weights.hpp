#pragma once

#include <map>
#include <string>

#include "skewrack/cocycle.hpp"
#include "skewrack/coloring.hpp"

namespace skewrack {

// Normalized cocycle invariant of a framed closed braid: the formal sum
// sum_C t^{Phi(C)} / |Ann(X)|^{#components}, stored as exact rationals
// keyed by coefficient-group element.  Total mass equals the normalized
// coloring count.
struct WeightPolynomial {
    FiniteAbelianGroup coeff;
    std::map<int, Rational> coeffs;  // only nonzero entries
    long long ann_size = 0;
    int components = 0;

    Rational mass() const {
        Rational m(0);
        for (const auto& [k, v] : coeffs) m = m + v;
        return m;
    }
    bool concentrated_at_zero() const {
        for (const auto& [k, v] : coeffs)
            if (k != 0 && v.num != 0) return false;
        return true;
    }
    bool operator==(const WeightPolynomial& o) const {
        return coeff == o.coeff && coeffs == o.coeffs;
    }
};

// Total weight of one coloring: -phi on the incoming pair of a positive
// crossing, +phi on the outgoing pair of a negative one (stacked opposite
// crossings cancel identically; the overall sign is the one matching the
// closed-form lens-space polynomials of the mod-p cocycle).
int weight_of_coloring(const BirackCocycle& phi, const FramedBraid& b, const Coloring& c);

WeightPolynomial weight_polynomial(const BirackCocycle& phi, const FramedBraid& b,
                                   const ScanOptions& opt = {});

} // namespace skewrack
