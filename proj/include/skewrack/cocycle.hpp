#pragma once

#include <vector>

#include "skewrack/abelian.hpp"
#include "skewrack/report.hpp"
#include "skewrack/skew_rack.hpp"

namespace skewrack {

// Birack 2-cocycle phi : X^2 -> A as a dense table over a table-sized rack.
struct BirackCocycle {
    const SkewRack* rack = nullptr;
    FiniteAbelianGroup coeff;
    std::vector<int> table;  // n*n coefficient indices

    int operator()(int a, int b) const { return table[(size_t)a * rack->size() + b]; }

    static BirackCocycle zero(const SkewRack& X, FiniteAbelianGroup A) {
        BirackCocycle phi;
        phi.rack = &X;
        phi.coeff = std::move(A);
        phi.table.assign((size_t)X.size() * X.size(), 0);
        return phi;
    }
};

// phi(a,b) + phi(a<|b, c) = phi(a, kappa(c)) + phi(a<|kappa(c), b<|c)
// and phi(b,c) = phi(kappa(b), kappa(c)).
CheckReport verify_birack_cocycle(const BirackCocycle& phi);

// phi(a,b) = -phi(a<|b, rho(b)) = -phi(rho(a), kappa(b)); needs rho.
CheckReport verify_symmetric_cocycle(const BirackCocycle& phi);

// Extension rack on X x A with (x,a) <| (y,b) = (x<|y, a+phi(x,y)) and
// kappa(x,a) = (kappa(x), a).  Satisfies the skew-rack axioms exactly when
// phi is a birack 2-cocycle: the distributive law encodes the cocycle
// identity and kappa-equivariance encodes the kappa-invariance of phi.
// (Negating the fiber under kappa would force 2*phi = 0 on top of the
// cocycle conditions and break the equivalence.)
SkewRack extend_by_cocycle(const BirackCocycle& phi);

// Element index (x, a) -> x * |A| + a of the extension rack.
inline int extension_index(const BirackCocycle& phi, int x, int a) {
    return x * phi.coeff.order() + a;
}

// phi_bar(a,b) = phi(a,b) - phi(a<|b, rho(b)); requires phi to be a birack
// 2-cocycle with phi(a,b) = -phi(rho(a), kappa(b)) (checked, rejected with
// a witness pair otherwise).  Output passes verify_symmetric_cocycle.
BirackCocycle symmetrize_cocycle(const BirackCocycle& phi);

} // namespace skewrack
