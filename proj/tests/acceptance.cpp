// Acceptance suite: one pass/fail line per criterion, exact checks only.
// Exit code is the number of failed criteria.
//
// The long-running torus-knot cells (p >= 7) are out of scope here and
// reported as informational notes; p in {11,13} is out of desk scale for
// this enumeration altogether.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

#include "skewrack/invariants.hpp"
#include "skewrack/json_io.hpp"
#include "skewrack/recipes.hpp"

using namespace skewrack;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    const char* label;
    Clock::time_point t0;
    bool ok = true;
    std::string detail;

    explicit Criterion(const char* l) : label(l), t0(Clock::now()) {}
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    ~Criterion() {
        double dt = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("[%s] %s (%.1fs)%s\n", ok ? "PASS" : "FAIL", label, dt,
                    detail.empty() ? "" : ("  -- " + detail).c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

std::string poly_str(const WeightPolynomial& P) {
    return dump_canonical(polynomial_to_json(P));
}

SkewRack sl2_rack(int p) {
    FiniteGroup K = build_sl2p(p);
    return product_rack(K, identity_hom(K));
}

std::vector<int> iota_vec(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

void criterion_1_axioms() {
    Criterion c("1: axiom suites (conjugation, product, normal pair; SR/SS exhaustive)");

    FiniteGroup S3 = build_symmetric(3);
    SkewRack conj_s3 = conjugation_rack(S3, identity_hom(S3));
    c.require(verify_skew_rack(conj_s3).passed, "S3 conj SR");
    c.require(verify_good_involution(conj_s3).passed, "S3 conj SS");

    FiniteGroup Z4 = build_cyclic(4);
    SkewRack conj_z4 = conjugation_rack(Z4, negation_hom(Z4));
    c.require(verify_skew_rack(conj_z4).passed, "Z4-neg conj SR");
    c.require(verify_good_involution(conj_z4).passed, "Z4-neg conj SS");

    for (int p : {3, 5}) {
        FiniteGroup Zp = build_cyclic(p);
        SkewRack X = product_rack(Zp, identity_hom(Zp));
        c.require(verify_skew_rack(X).passed, "Z/p^2 product SR");
        c.require(verify_good_involution(X).passed, "Z/p^2 product SS");
    }

    SkewRack sl2 = sl2_rack(3);
    c.require(verify_skew_rack(sl2).passed, "SL2(F3)^2 SR");
    c.require(verify_good_involution(sl2).passed, "SL2(F3)^2 SS");

    NormalPairRack s3a3 = normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3));
    c.require(verify_skew_rack(s3a3.rack).passed, "S3/A3 SR");
    c.require(verify_good_involution(s3a3.rack).passed, "S3/A3 SS");

    // the Z/3 additive counterexample, with the exact first witness
    std::vector<uint16_t> add9(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) add9[a * 3 + b] = (uint16_t)((a + b) % 3);
    SkewRack bad = SkewRack::from_tables(3, add9, {0, 1, 2}, std::nullopt);
    CheckReport r = verify_skew_rack(bad);
    c.require(!r.passed && r.axiom == "SR3" && r.witness == std::vector<long long>{0, 0, 1},
              "Z/3 additive counterexample witness");
}

void criterion_2_twist() {
    Criterion c("2: twist map composed with kappa(x)<|x is the identity, elementwise");
    FiniteGroup S3 = build_symmetric(3);
    FiniteGroup Z4 = build_cyclic(4);
    FiniteGroup Z3 = build_cyclic(3);
    std::vector<SkewRack> racks;
    racks.push_back(conjugation_rack(S3, identity_hom(S3)));
    racks.push_back(conjugation_rack(Z4, negation_hom(Z4)));
    racks.push_back(product_rack(Z3, identity_hom(Z3)));
    racks.push_back(sl2_rack(3));
    racks.push_back(normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3)).rack);
    racks.push_back(mod_p_symmetric_cocycle(5, -1)->pair.rack);
    for (const SkewRack& X : racks) {
        std::vector<int> tw = tw_map(X);  // tw_map itself asserts the inverse law
        bool all = true;
        for (int x = 0; x < X.size(); ++x) all &= tw[X.op(X.kappa(x), x)] == x;
        c.require(all, "inverse identity");
    }
}

void criterion_3_certificates() {
    Criterion c("3: certified delta instances are stable to depth 2; commutative images collapse");
    PropertyFrOptions fr;
    fr.n_max = 2;
    fr.budget = 400000;  // exhaustive at depth 2 for every instance below

    struct Inst {
        std::string name;
        SkewRack rack;
        bool commutative;
    };
    std::vector<Inst> instances;

    // homomorphism delta with delta^2 = 0 on (Z/2)^2, rho = id
    std::vector<uint16_t> mult(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) mult[a * 4 + b] = (uint16_t)(a ^ b);
    FiniteGroup K22(std::move(mult));
    std::vector<int> delta22(4);
    for (int a = 0; a < 4; ++a) delta22[a] = (a & 1) << 1;
    DeltaRackResult d22 = delta_rack(K22, identity_hom(K22), delta22, iota_vec(4));
    if (!d22.rack || !d22.cert.certified()) {
        c.require(false, "(Z/2)^2 homomorphism instance failed certification");
    } else {
        instances.push_back({"(Z/2)^2 hom", *d22.rack, d22.cert.image_commutative});
    }

    // twisted conjugacy on Z/4 with f = negation
    FiniteGroup Z4 = build_cyclic(4);
    DeltaRackResult tz4 = delta_rack(Z4, negation_hom(Z4),
                                     twisted_conjugacy_delta(Z4, negation_hom(Z4)),
                                     std::vector<int>{0, 3, 2, 1});
    if (!tz4.rack || !tz4.cert.certified()) {
        c.require(false, "Z/4 twisted-conjugacy instance failed certification");
    } else {
        instances.push_back({"Z/4 twisted", *tz4.rack, tz4.cert.image_commutative});
    }

    // normal pairs and the SL2(F3) product rack
    FiniteGroup S3 = build_symmetric(3);
    NormalPairRack s3a3 = normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3));
    c.require(s3a3.cert.certified(), "S3/A3 certificate");
    instances.push_back({"S3/A3", s3a3.rack, s3a3.cert.image_commutative});

    for (int p : {3, 11}) {
        FiniteGroup Zp = build_cyclic(p);
        NormalPairRack P = normal_pair_rack(Zp, iota_vec(p), identity_hom(Zp));
        c.require(P.cert.certified(), "Z/p pair certificate");
        instances.push_back({"Z/" + std::to_string(p) + " pair", P.rack,
                             P.cert.image_commutative});
    }
    FiniteGroup sl2 = build_sl2p(3);
    NormalPairRack big = normal_pair_rack(sl2, iota_vec(24), identity_hom(sl2));
    c.require(big.cert.certified(), "SL2(F3) pair certificate");
    instances.push_back({"SL2(F3) pair", big.rack, big.cert.image_commutative});

    for (const Inst& inst : instances) {
        CheckReport r = check_property_fr(inst.rack, fr);
        c.require(r.passed, inst.name + " bounded check: " + r.describe());
        if (inst.commutative)
            c.require(check_f_link_homotopic(inst.rack).passed, inst.name + " collapse");
    }
    // the SL2 pair has a nonabelian image and must NOT collapse
    c.require(!big.cert.image_commutative, "SL2 image nonabelian");
    c.require(!check_f_link_homotopic(big.rack).passed, "SL2 pair does not collapse");
}

void criterion_4_table() {
    {
        Criterion c("4a: torus-knot counts, p = 3 (all six cells = 24)");
        SkewRack X = sl2_rack(3);
        for (int n : {3, 5, 7})
            for (int s : {+1, -1}) {
                long long got = count_colorings(X, build_torus2(n, s));
                std::ostringstream what;
                what << "D" << n << (s > 0 ? "+" : "-") << " = " << got;
                c.require(got == 24, what.str());
            }
    }
    {
        Criterion c("4b: torus-knot counts, p = 5 (14520/120 pattern)");
        SkewRack X = sl2_rack(5);
        const long long expect[6] = {14520, 120, 14520, 120, 120, 120};
        int i = 0;
        for (int n : {3, 5, 7})
            for (int s : {+1, -1}) {
                long long got = count_colorings(X, build_torus2(n, s));
                std::ostringstream what;
                what << "D" << n << (s > 0 ? "+" : "-") << " = " << got << " want "
                     << expect[i];
                c.require(got == expect[i], what.str());
                ++i;
            }
    }
    std::printf("[info] 4c: p = 7 cells (e.g. D3- = 337*336 = 113232) are long-running and "
                "gated behind --allow-long in the CLI; p in {11,13} out of desk scale\n");
}

void criterion_5_lens_counts() {
    Criterion c("5: lens coloring counts p^3, dependent only on n*m");
    FiniteGroup Z11 = build_cyclic(11);
    NormalPairRack P = normal_pair_rack(Z11, iota_vec(11), identity_hom(Z11));
    for (auto [n, m] : std::vector<std::pair<int, int>>{{12, 1}, {4, 3}, {2, 6}}) {
        long long got = count_colorings(P.rack, build_hopf(n, m));
        std::ostringstream what;
        what << "hopf(" << n << "," << m << ") = " << got;
        c.require(got == 11 * 11 * 11, what.str());
    }
    FiniteGroup Z3 = build_cyclic(3);
    NormalPairRack P3 = normal_pair_rack(Z3, iota_vec(3), identity_hom(Z3));
    for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 1}, {2, 2}}) {
        long long got = count_colorings(P3.rack, build_hopf(n, m));
        c.require(got == 27, "p=3 hopf count");
    }
}

void criterion_6_fr_counts() {
    Criterion c("6: Fenn-Rourke count invariance, 25 seeded words, n <= 2, both signs");
    FrHarnessOptions opt;
    opt.trials = 25;
    opt.max_strands = 3;
    opt.max_letters = 6;
    opt.seed = 0;

    FiniteGroup Z3 = build_cyclic(3);
    CheckReport a = check_count_fr_invariance(product_rack(Z3, identity_hom(Z3)), opt);
    c.require(a.passed, "(Z/3)^2 rack: " + a.describe());

    FiniteGroup S3 = build_symmetric(3);
    NormalPairRack P = normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3));
    CheckReport b = check_count_fr_invariance(P.rack, opt);
    c.require(b.passed, "S3/A3 rack: " + b.describe());
}

void criterion_7_cocycle_machinery() {
    Criterion c("7: extension iff, symmetrization, closed form = symmetrized construction");
    FiniteGroup Z3 = build_cyclic(3);
    SkewRack X = product_rack(Z3, identity_hom(Z3));
    FiniteAbelianGroup A({3});

    std::mt19937 rng(0);
    for (int t = 0; t < 100; ++t) {
        BirackCocycle r = BirackCocycle::zero(X, A);
        for (auto& v : r.table) v = (int)(rng() % 3);
        bool is_cocycle = verify_birack_cocycle(r).passed;
        bool extends = verify_skew_rack(extend_by_cocycle(r)).passed;
        if (is_cocycle != extends) {
            c.require(false, "iff fails on random table");
            break;
        }
    }
    // named cocycles, both directions of the iff
    std::vector<std::shared_ptr<ModPCocycle>> named;
    for (int p : {3, 5}) named.push_back(mod_p_symmetric_cocycle(p, +1));
    named.push_back(mod_p_symmetric_cocycle(3, -1));
    for (auto& mp : named) {
        c.require(verify_birack_cocycle(mp->phi).passed, "named cocycle verifies");
        c.require(verify_skew_rack(extend_by_cocycle(mp->phi)).passed, "named extension");
    }
    for (int mask = 0; mask < 8; ++mask) {
        auto z2 = bilinear_z2_cocycle(mask >> 2 & 1, mask >> 1 & 1, mask & 1);
        c.require(verify_birack_cocycle(z2->phi).passed &&
                      verify_skew_rack(extend_by_cocycle(z2->phi)).passed,
                  "z2 cocycle extension");
    }

    // symmetrization output passes the symmetric verifier; closed form agrees
    for (int p : {3, 5, 7}) {
        FiniteGroup Zp = build_cyclic(p);
        NormalPairRack R = normal_pair_rack(Zp, iota_vec(p), identity_hom(Zp));
        std::vector<int> lambda = iota_vec(p);
        Group2Cocycle th = fermat_quotient_cocycle(Zp, p, +1);
        BirackCocycle lt = lambda_theta_cocycle(R, identity_hom(Zp), lambda, th);
        c.require(verify_birack_cocycle(lt).passed, "lambda-theta verifies");
        BirackCocycle bar = symmetrize_cocycle(lt);
        c.require(verify_symmetric_cocycle(bar).passed, "symmetrized verifies");
        c.require(bar.table == mod_p_symmetric_cocycle(p, +1)->phi.table,
                  "closed form = symmetrized construction, p=" + std::to_string(p));
    }
}

void criterion_8_cocycle_harnesses() {
    Criterion c("8: mod-p cocycle stability harnesses and the lens polynomial");
    FrHarnessOptions opt;
    opt.trials = 25;
    opt.max_strands = 3;
    opt.max_letters = 6;
    opt.seed = 0;

    for (int p : {3, 5, 11}) {
        auto mp = mod_p_symmetric_cocycle(p, +1);
        CheckReport fr = check_cocycle_property_fr(mp->phi, opt);
        c.require(fr.passed, "weight stability p=" + std::to_string(p) + ": " + fr.describe());
        CheckReport fl = check_cocycle_f_link(mp->phi);
        c.require(fl.passed, "f-link condition p=" + std::to_string(p));
    }

    // exact lens polynomial at p = 11: the multiset of -x^2
    auto mp11 = mod_p_symmetric_cocycle(11, +1);
    WeightPolynomial P = weight_polynomial(mp11->phi, build_hopf(12, 1));
    std::map<int, Rational> expect;
    expect[0] = Rational(1);
    for (int x = 1; x < 11; ++x) expect[(11 - x * x % 11) % 11] = Rational(2);
    c.require(P.coeffs == expect, "hopf(12,1) polynomial " + poly_str(P));

    WeightPolynomial Q = weight_polynomial(mp11->phi, build_hopf(4, 3));
    std::printf("[info] 8: L(11,1) vs L(11,3) polynomials %s (recorded; equality is an "
                "acceptable outcome)\n",
                P.coeffs == Q.coeffs ? "EQUAL" : "DIFFER");
    std::printf("[info] 8: L(11,1) -> %s\n", poly_str(P).c_str());
    std::printf("[info] 8: L(11,3) -> %s\n", poly_str(Q).c_str());
}

void criterion_9_h1_oracle() {
    Criterion c("9: abelian counting oracle across unknots, hopf links, chains, trefoil");
    for (int m : {2, 5, 11}) {
        FiniteGroup K = build_cyclic(m);
        for (const FramedBraid& b :
             {build_unknot(0), build_unknot(3), build_unknot(-1), build_hopf(3, 2),
              build_hopf(0, 0), build_hopf(12, 1), build_lens_chain(11, 3),
              build_lens_chain(5, 2), build_torus2(3, 0)}) {
            CheckReport r = abelian_h1_oracle(K, b);
            if (!r.passed) {
                c.require(false, "K=Z/" + std::to_string(m) + " braid " + serialize_braid(b) +
                                     ": " + r.describe());
            }
        }
    }
}

void criterion_10_obstruction_criteria() {
    Criterion c("10: counting and weight criteria on framing-zero knot braids");
    FiniteGroup S3 = build_symmetric(3);
    NormalPairRack R = normal_pair_rack(S3, alternating_subgroup(S3, 3), identity_hom(S3));

    CountCriterion u = criterion_count(R, build_unknot(0));
    c.require(u.ratio == Rational(3) && u.verdict == Verdict::kInconclusive,
              "unknot ratio " + u.ratio.str());

    FramedBraid tref = build_torus2(3, 0);
    CountCriterion t = criterion_count(R, tref);
    c.require(!(t.ratio < Rational(3)) && t.verdict == Verdict::kInconclusive,
              "trefoil ratio " + t.ratio.str());

    std::vector<Coloring> fam = longitude_family(R, tref);
    std::set<std::vector<int>> tops;
    bool all_valid = true;
    for (const Coloring& col : fam) {
        all_valid &= validate_coloring(R.rack, tref, col).passed;
        tops.insert(col.top);
    }
    c.require(fam.size() == 18 && tops.size() == 18 && all_valid,
              "explicit family of |K x N| colorings validates");

    for (const FramedBraid& b : {build_unknot(0), tref, parse_braid("3: 1 -2 1 -2")}) {
        for (int mask = 0; mask < 8; ++mask) {
            WeightCriterion w = criterion_weight(b, mask >> 2 & 1, mask >> 1 & 1, mask & 1);
            if (w.verdict != Verdict::kInconclusive || !w.poly.concentrated_at_zero()) {
                c.require(false, "weight criterion leaks mass on " + serialize_braid(b));
                break;
            }
        }
    }
}

void criterion_11_property_suite() {
    Criterion c("11: rewrite invariance (200+ rewrites) and solver-vs-oracle equivalence");
    std::mt19937 rng(0);
    FiniteGroup Z3 = build_cyclic(3);
    SkewRack X = product_rack(Z3, identity_hom(Z3));
    auto mp = mod_p_symmetric_cocycle(3, +1);

    int rewrites = 0;
    for (int trial = 0; trial < 45 && c.ok; ++trial) {
        FramedBraid b = random_word(rng, 3, 6);
        long long c0 = count_colorings(X, b);
        WeightPolynomial w0 = weight_polynomial(mp->phi, b);
        FramedBraid d = b;
        for (int k = 0; k < 5; ++k) {
            d = random_rewrite(rng, d);
            ++rewrites;
        }
        c.require(count_colorings(X, d) == c0, "count invariance under rewrites");
        c.require(weight_polynomial(mp->phi, d) == w0, "weight invariance under rewrites");
        FramedBraid s = stabilize(stabilize(b, +1), -1);
        c.require(count_colorings(X, s) == c0, "doubled stabilization count");
        c.require(weight_polynomial(mp->phi, s) == w0, "doubled stabilization weight");
    }
    c.require(rewrites >= 200, "rewrite volume");

    // solver agrees with filtering all top tuples wherever |X|^s <= 1e5
    FiniteGroup S3 = build_symmetric(3);
    SkewRack C = conjugation_rack(S3, identity_hom(S3));
    FiniteGroup Z2 = build_cyclic(2);
    SkewRack V = product_rack(Z2, identity_hom(Z2));
    for (int trial = 0; trial < 30 && c.ok; ++trial) {
        FramedBraid b = random_word(rng, 4, 7);
        for (const SkewRack* R : {&X, &C, &V}) {
            double total = 1;
            for (int i = 0; i < b.strands; ++i) total *= R->size();
            if (total > 1e5) continue;
            long long brute = 0;
            std::vector<int> top(b.strands, 0);
            while (true) {
                if (colors_close(*R, b, top)) ++brute;
                int i = 0;
                while (i < b.strands && ++top[i] == R->size()) top[i++] = 0;
                if (i == b.strands) break;
            }
            c.require(count_colorings(*R, b) == brute,
                      "oracle mismatch on " + serialize_braid(b));
        }
    }
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion_1_axioms();
    criterion_2_twist();
    criterion_3_certificates();
    criterion_4_table();
    criterion_5_lens_counts();
    criterion_6_fr_counts();
    criterion_7_cocycle_machinery();
    criterion_8_cocycle_harnesses();
    criterion_9_h1_oracle();
    criterion_10_obstruction_criteria();
    criterion_11_property_suite();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%d criterion group(s) failed; total %.1fs\n", failures, dt);
    return failures;
}
