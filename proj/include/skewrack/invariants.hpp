#pragma once

#include <string>
#include <vector>

#include "skewrack/constructions.hpp"
#include "skewrack/weights.hpp"

namespace skewrack {

struct FrHarnessOptions {
    int trials = 25;
    int max_strands = 3;
    int max_letters = 6;
    int n_max = 2;
    unsigned seed = 0;
    ScanOptions scan;
};

// For seeded random base words and every twist-region width n <= n_max,
// both circle signs, the normalized coloring counts of the two sides of a
// Fenn-Rourke pair must agree.
CheckReport check_count_fr_invariance(const SkewRack& X, const FrHarnessOptions& opt = {});

// Same harness on the normalized weight polynomial of a symmetric cocycle.
CheckReport check_cocycle_property_fr(const BirackCocycle& phi,
                                      const FrHarnessOptions& opt = {});

// phi((a.g) <| kappa(a), a.g) + phi(a, a <| kappa(a))
//   = phi(kappa(a), a.g) + phi((a.g) <| kappa(a), a)  for all a, g.
CheckReport check_cocycle_f_link(const BirackCocycle& phi, size_t cap = 200000);

enum class Verdict { kObstructed, kInconclusive };

struct CountCriterion {
    Rational ratio;       // |Col| / |K|^{#components}
    long long n_order;    // the bound |N|
    Verdict verdict;      // obstructed when ratio < |N|
};

// Surgery obstruction by counting: a diagram Fenn-Rourke equivalent to a
// framing-zero knot diagram colored by the K x N rack (f = id) carries at
// least |N| * |K|^{#components} colorings.
CountCriterion criterion_count(const NormalPairRack& R, const FramedBraid& b,
                               const ScanOptions& opt = {});

struct WeightCriterion {
    WeightPolynomial poly;
    Verdict verdict;  // obstructed when mass leaves 0
};

// Surgery obstruction by weights: all eight Z/2 bilinear cocycle invariants
// of a framing-zero knot diagram are concentrated at zero.
WeightCriterion criterion_weight(const FramedBraid& b, int k1, int k2, int k3,
                                 const ScanOptions& opt = {});

// The explicit coloring family on a framing-zero knot braid that witnesses
// the count bound: walking along the knot, the K-part is multiplied by the
// fixed commutator g^-1 h g at each left-input passage of a positive
// crossing (inverse at a negative one) while the N-part stays h.
std::vector<Coloring> longitude_family(const NormalPairRack& R, const FramedBraid& b);

// Abelian counting oracle: brute-force coloring count of the K x K rack
// (f = id) against |Hom(H1, K)| * |K|^{#components} read off the Smith
// normal form of the linking matrix.
CheckReport abelian_h1_oracle(const FiniteGroup& K, const FramedBraid& b,
                              const ScanOptions& opt = {});

} // namespace skewrack
