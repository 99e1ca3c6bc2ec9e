#include "skewrack/invariants.hpp"

#include <algorithm>
#include <random>

namespace skewrack {

CheckReport check_count_fr_invariance(const SkewRack& X, const FrHarnessOptions& opt) {
    std::mt19937 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        FramedBraid base = random_word(rng, opt.max_strands, opt.max_letters);
        for (int n = 0; n <= std::min(opt.n_max, base.strands); ++n)
            for (int sign : {+1, -1}) {
                auto [D, Dp] = build_fr_pair(base, n, sign);
                Rational a = normalized_count(X, D, opt.scan);
                Rational b = normalized_count(X, Dp, opt.scan);
                if (!(a == b))
                    return CheckReport::fail("fr-count", {t, n, sign});
            }
    }
    return CheckReport::ok();
}

CheckReport check_cocycle_property_fr(const BirackCocycle& phi, const FrHarnessOptions& opt) {
    std::mt19937 rng(opt.seed);
    for (int t = 0; t < opt.trials; ++t) {
        FramedBraid base = random_word(rng, opt.max_strands, opt.max_letters);
        for (int n = 0; n <= std::min(opt.n_max, base.strands); ++n)
            for (int sign : {+1, -1}) {
                auto [D, Dp] = build_fr_pair(base, n, sign);
                WeightPolynomial a = weight_polynomial(phi, D, opt.scan);
                WeightPolynomial b = weight_polynomial(phi, Dp, opt.scan);
                if (!(a == b))
                    return CheckReport::fail("fr-weight", {t, n, sign});
            }
    }
    return CheckReport::ok();
}

CheckReport check_cocycle_f_link(const BirackCocycle& phi, size_t cap) {
    const SkewRack& X = *phi.rack;
    const FiniteAbelianGroup& A = phi.coeff;
    InnEvenGroup G = inn_even(X, cap);
    for (int a = 0; a < X.size(); ++a) {
        const int ka = X.kappa(a);
        const int aka = X.op(a, ka);
        for (size_t gi = 0; gi < G.elements.size(); ++gi) {
            int ag = G.elements[gi][a];
            int agka = X.op(ag, ka);
            int lhs = A.add(phi(agka, ag), phi(a, aka));
            int rhs = A.add(phi(ka, ag), phi(agka, a));
            if (lhs != rhs) return CheckReport::fail("cocycle-f-link", {a, (long long)gi});
        }
    }
    return CheckReport::ok();
}

CountCriterion criterion_count(const NormalPairRack& R, const FramedBraid& b,
                               const ScanOptions& opt) {
    for (int x = 0; x < R.rack.size(); ++x)
        if (R.rack.kappa(x) != x)
            throw std::invalid_argument("count criterion needs the f = id rack family");
    const long long k_order = R.cert.fiber_size;  // |K|
    const long long n_order = R.cert.image_size;  // |N|
    DiagramStats st = closure_stats(b);

    CountCriterion out;
    out.n_order = n_order;
    out.ratio = Rational(count_colorings(R.rack, b, opt), checked_pow(k_order, st.components));
    out.verdict =
        out.ratio < Rational(n_order) ? Verdict::kObstructed : Verdict::kInconclusive;
    return out;
}

WeightCriterion criterion_weight(const FramedBraid& b, int k1, int k2, int k3,
                                 const ScanOptions& opt) {
    auto z2 = bilinear_z2_cocycle(k1, k2, k3);
    WeightCriterion out;
    out.poly = weight_polynomial(z2->phi, b, opt);
    out.verdict =
        out.poly.concentrated_at_zero() ? Verdict::kInconclusive : Verdict::kObstructed;
    return out;
}

std::vector<Coloring> longitude_family(const NormalPairRack& R, const FramedBraid& b) {
    const SkewRack& X = R.rack;
    for (int x = 0; x < X.size(); ++x)
        if (X.kappa(x) != x) throw std::invalid_argument("longitude family needs f = id");
    DiagramStats st = closure_stats(b);
    if (st.components != 1) throw std::invalid_argument("longitude family needs a knot braid");

    // walk the knot once, tracking the crossing-sign exponent at each top
    const int L = (int)b.letters.size();
    std::vector<long long> top_exp(b.strands, 0);
    {
        int pos = 0, level = 0;
        long long e = 0;
        top_exp[0] = 0;
        while (true) {
            bool moved = false;
            for (int lev = level; lev < L; ++lev) {
                const auto& l = b.letters[lev];
                if (l.pos == pos) {           // pass as left input
                    if (l.sign > 0) ++e;      // K-part gains one conjugated h
                    pos = l.pos + 1;
                    level = lev + 1;
                    moved = true;
                    break;
                }
                if (l.pos + 1 == pos) {       // pass as right input
                    if (l.sign < 0) --e;
                    pos = l.pos;
                    level = lev + 1;
                    moved = true;
                    break;
                }
            }
            if (moved) continue;
            // reached the bottom; wrap around the closure
            if (pos == 0) break;
            top_exp[pos] = e;
            level = 0;
        }
    }

    const FiniteGroup& K = R.K;
    const int m = (int)R.n_elems.size();

    // the walk multiplies the K-part by the fixed conjugate of h once per
    // signed passage, so exponent e realizes the color (h^e g, h)
    std::vector<Coloring> out;
    for (int g = 0; g < K.order(); ++g)
        for (int hi = 0; hi < m; ++hi) {
            const int h = R.n_elems[hi];
            std::vector<int> top(b.strands);
            for (int p = 0; p < b.strands; ++p) {
                long long e = top_exp[p];
                int hk = K.id();
                for (long long i = 0; i < (e >= 0 ? e : -e); ++i)
                    hk = K.mul(hk, e >= 0 ? h : K.inv(h));
                top[p] = K.mul(hk, g) * m + hi;
            }
            std::vector<Coloring::Arc> trace;
            if (!colors_close(X, b, top, &trace)) continue;
            Coloring c;
            c.top = std::move(top);
            c.crossings = std::move(trace);
            out.push_back(std::move(c));
        }
    return out;
}

CheckReport abelian_h1_oracle(const FiniteGroup& K, const FramedBraid& b,
                              const ScanOptions& opt) {
    if (!K.abelian()) throw std::invalid_argument("oracle needs abelian K");
    SkewRack X = product_rack(K, identity_hom(K));
    DiagramStats st = closure_stats(b);
    std::vector<std::vector<long long>> M = st.linking;
    std::vector<long long> divs = smith_normal_form(M);
    long long expected = hom_count_abelian(divs, K);
    for (int c = 0; c < st.components; ++c) expected *= K.order();
    long long got = count_colorings(X, b, opt);
    if (got != expected) return CheckReport::fail("h1-count", {got, expected});
    return CheckReport::ok();
}

} // namespace skewrack
