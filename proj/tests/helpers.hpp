#pragma once

// Shared fixtures: the standard racks the suite exercises.

#include "skewrack/constructions.hpp"

namespace skewrack::testing {

inline SkewRack s3_conjugation() {
    static FiniteGroup S3 = build_symmetric(3);
    return conjugation_rack(S3, identity_hom(S3));
}

// (Z/p)^2 product rack with f = id: (x,a) <| (y,b) = (x+b, a).
inline SkewRack zp_product(int p) {
    FiniteGroup Zp = build_cyclic(p);
    return product_rack(Zp, identity_hom(Zp));
}

inline NormalPairRack zp_pair(int p) {
    FiniteGroup Zp = build_cyclic(p);
    std::vector<int> all(p);
    for (int i = 0; i < p; ++i) all[i] = i;
    return normal_pair_rack(Zp, all, identity_hom(Zp));
}

inline NormalPairRack s3_a3_pair() {
    FiniteGroup S3 = build_symmetric(3);
    return normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3));
}

// index helper for product racks on Z/p: (x, a) -> p*x + a
inline int zp2(int p, int x, int a) { return p * x + a; }

// rack from an explicit operation, for counterexample fixtures
template <class Op, class Kappa>
SkewRack table_rack(int n, Op&& op, Kappa&& kappa) {
    std::vector<uint16_t> t((size_t)n * n);
    std::vector<int> k(n);
    for (int a = 0; a < n; ++a) {
        k[a] = kappa(a);
        for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = (uint16_t)op(a, b);
    }
    return SkewRack::from_tables(n, std::move(t), std::move(k), std::nullopt);
}

template <class Op, class Kappa, class Rho>
SkewRack table_rack_rho(int n, Op&& op, Kappa&& kappa, Rho&& rho) {
    std::vector<uint16_t> t((size_t)n * n);
    std::vector<int> k(n), r(n);
    for (int a = 0; a < n; ++a) {
        k[a] = kappa(a);
        r[a] = rho(a);
        for (int b = 0; b < n; ++b) t[(size_t)a * n + b] = (uint16_t)op(a, b);
    }
    return SkewRack::from_tables(n, std::move(t), std::move(k), std::move(r));
}

} // namespace skewrack::testing
