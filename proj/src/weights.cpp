#include "skewrack/weights.hpp"

namespace skewrack {

int weight_of_coloring(const BirackCocycle& phi, const FramedBraid& b, const Coloring& c) {
    if (c.crossings.size() != b.letters.size())
        throw std::invalid_argument("coloring/braid mismatch");
    const int n = phi.rack->size();
    for (const auto& arc : c.crossings)
        for (int v : {arc.in_l, arc.in_r, arc.out_l, arc.out_r})
            if (v < 0 || v >= n) throw std::invalid_argument("coloring/rack mismatch");
    const FiniteAbelianGroup& A = phi.coeff;
    int acc = A.zero();
    // same sign coupling as the histogram kernel: -phi on the top pair of a
    // positive generator, +phi on the bottom pair of a negative one
    for (size_t i = 0; i < b.letters.size(); ++i) {
        const auto& arc = c.crossings[i];
        if (b.letters[i].sign > 0)
            acc = A.add(acc, A.neg(phi(arc.in_l, arc.in_r)));
        else
            acc = A.add(acc, phi(arc.out_l, arc.out_r));
    }
    return acc;
}

WeightPolynomial weight_polynomial(const BirackCocycle& phi, const FramedBraid& b,
                                   const ScanOptions& opt) {
    const SkewRack& X = *phi.rack;
    const FiniteAbelianGroup& A = phi.coeff;
    const int m = A.order();

    std::vector<int> add((size_t)m * m), neg(m);
    for (int a = 0; a < m; ++a) {
        neg[a] = A.neg(a);
        for (int bb = 0; bb < m; ++bb) add[(size_t)a * m + bb] = A.add(a, bb);
    }
    std::vector<long long> hist = weight_histogram(X, b, phi.table, m, add, neg, opt);

    WeightPolynomial P;
    P.coeff = A;
    P.ann_size = (long long)ann(X).size();
    if (P.ann_size == 0) throw std::domain_error("weight normalization needs nonempty Ann(X)");
    P.components = closure_stats(b).components;
    const long long den = checked_pow(P.ann_size, P.components);
    for (int a = 0; a < m; ++a)
        if (hist[a]) P.coeffs.emplace(a, Rational(hist[a], den));
    return P;
}

} // namespace skewrack
