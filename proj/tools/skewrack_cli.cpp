// Command-line front end: verification, coloring counts, cocycle weight
// polynomials, the torus-knot count table, lens-space runs, Fenn-Rourke
// invariance harnesses, and the two surgery-obstruction criteria.
//
// Exit codes: 0 success, 1 failed verification or an obstruction verdict,
// 2 usage/parse/runtime errors.  Results go to stdout (JSON or CSV),
// diagnostics to stderr.  Identical inputs produce byte-identical output.

#include <iostream>

#include "CLI11.hpp"

#include "skewrack/coloring.hpp"
#include "skewrack/invariants.hpp"
#include "skewrack/json_io.hpp"
#include "skewrack/recipes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace skewrack;

struct Common {
    std::string format = "json";
    int threads = 0;
    unsigned seed = 0;
    long long budget = 10'000'000'000LL;
    bool allow_long = false;
};

void emit(const Common& c, const json& j) {
    if (c.format == "json") {
        std::cout << dump_canonical(j) << "\n";
        return;
    }
    // csv: flatten one level; nested values stay as compact json
    std::string header, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!header.empty()) {
            header += ",";
            row += ",";
        }
        header += it.key();
        if (it.value().is_string())
            row += it.value().get<std::string>();
        else
            row += it.value().dump();
    }
    std::cout << header << "\n" << row << "\n";
}

ScanOptions scan_options(const Common& c) {
    ScanOptions o;
    o.budget = c.budget;
    o.threads = c.threads;
    return o;
}

std::string verdict_str(Verdict v) {
    return v == Verdict::kObstructed ? "OBSTRUCTED" : "INCONCLUSIVE";
}

int run(int argc, char** argv) {
    CLI::App app{"skew-rack coloring and cocycle invariants of framed closed braids"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    Common common;
    app.add_option("--format", common.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", common.threads, "OpenMP thread count (0 = default)");
    app.add_option("--seed", common.seed, "seed for randomized subcommands");
    auto* budget_opt = app.add_option("--budget", common.budget, "propagation step budget");
    app.add_flag("--allow-long", common.allow_long, "permit long-running instances");

    // verify
    auto* verify = app.add_subcommand("verify", "check the skew-rack axioms of a rack recipe");
    std::string v_rack;
    verify->add_option("--rack", v_rack, "rack recipe")->required();

    // property-fr
    auto* pfr = app.add_subcommand("property-fr", "bounded Fenn-Rourke stability check");
    std::string p_rack;
    int p_depth = 2;
    long long p_budget_seqs = 200000;
    pfr->add_option("--rack", p_rack, "rack recipe")->required();
    pfr->add_option("--depth", p_depth, "max sequence length");
    pfr->add_option("--sequences", p_budget_seqs, "sequence budget per length");

    // color
    auto* color = app.add_subcommand("color", "count closure colorings of a braid");
    std::string c_rack, c_braid;
    bool c_norm = false;
    color->add_option("--rack", c_rack, "rack recipe")->required();
    color->add_option("--braid", c_braid, "braid word \"s: w1 w2 ...\"")->required();
    color->add_flag("--normalized", c_norm, "include Ann-normalized count");

    // invariant
    auto* inv = app.add_subcommand("invariant", "weight polynomial of a cocycle on a braid");
    std::string i_rack, i_cocycle, i_braid;
    inv->add_option("--rack", i_rack, "rack recipe (optional for prop28/z2)");
    inv->add_option("--cocycle", i_cocycle, "cocycle recipe")->required();
    inv->add_option("--braid", i_braid, "braid word")->required();

    // table1
    auto* t1 = app.add_subcommand("table1", "torus-knot coloring count for the SL2(F_p) rack");
    int t_p = 3, t_n = 3;
    std::string t_sign = "+";
    t1->add_option("--p", t_p, "prime (3,5,7,...)")->required();
    t1->add_option("--n", t_n, "odd torus parameter")->required();
    t1->add_option("--sign", t_sign, "framing sign + or -")->required();

    // lens
    auto* lens = app.add_subcommand("lens", "lens-space chain: counts and optional weights");
    long long l_p = 0, l_q = 0;
    std::string l_cocycle, l_rack;
    lens->add_option("--p", l_p)->required();
    lens->add_option("--q", l_q)->required();
    lens->add_option("--cocycle", l_cocycle, "cocycle recipe (prop28:... for weights)");
    lens->add_option("--rack", l_rack, "rack recipe (default normal_pair Z/p)");

    // fr-test
    auto* frt = app.add_subcommand("fr-test", "randomized Fenn-Rourke invariance harness");
    std::string f_rack, f_cocycle;
    int f_trials = 25, f_strands = 3, f_letters = 6;
    frt->add_option("--rack", f_rack, "rack recipe")->required();
    frt->add_option("--cocycle", f_cocycle, "cocycle recipe (weights instead of counts)");
    frt->add_option("--trials", f_trials);
    frt->add_option("--max-strands", f_strands);
    frt->add_option("--max-letters", f_letters);

    // criterion
    auto* crit = app.add_subcommand("criterion", "surgery-of-a-knot obstruction criteria");
    std::string cr_mode, cr_braid, cr_K = "s3", cr_N = "a3";
    int cr_k1 = 0, cr_k2 = 0, cr_k3 = 0;
    crit->add_option("--mode", cr_mode, "count|weight")
        ->required()
        ->check(CLI::IsMember({"count", "weight"}));
    crit->add_option("--braid", cr_braid)->required();
    crit->add_option("--K", cr_K, "ambient group (count mode)");
    crit->add_option("--N", cr_N, "normal subgroup (count mode)");
    crit->add_option("--k1", cr_k1);
    crit->add_option("--k2", cr_k2);
    crit->add_option("--k3", cr_k3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (common.threads > 0) omp_set_num_threads(common.threads);
#endif
    // long runs need a bigger step budget unless the user pinned one
    if (common.allow_long && budget_opt->count() == 0) common.budget = 100'000'000'000'000LL;

    if (verify->parsed()) {
        auto r = parse_rack_recipe(v_rack);
        CheckReport sr = verify_skew_rack(r->rack);
        json j;
        j["rack"] = v_rack;
        j["skew_rack"] = report_to_json(sr);
        bool ok = sr.passed;
        if (r->rack.has_rho()) {
            CheckReport ss = verify_good_involution(r->rack);
            j["good_involution"] = report_to_json(ss);
            ok = ok && ss.passed;
        }
        emit(common, j);
        return ok ? 0 : 1;
    }

    if (pfr->parsed()) {
        auto r = parse_rack_recipe(p_rack);
        PropertyFrOptions o;
        o.n_max = p_depth;
        o.budget = p_budget_seqs;
        o.seed = common.seed;
        o.threads = common.threads;
        CheckReport rep = check_property_fr(r->rack, o);
        json j;
        j["rack"] = p_rack;
        j["depth"] = p_depth;
        j["property_fr"] = report_to_json(rep);
        emit(common, j);
        return rep.passed ? 0 : 1;
    }

    if (color->parsed()) {
        auto r = parse_rack_recipe(c_rack);
        FramedBraid b = parse_braid(c_braid);
        long long count = count_colorings(r->rack, b, scan_options(common));
        json j;
        j["count"] = count;
        if (c_norm) {
            DiagramStats st = closure_stats(b);
            long long a = (long long)ann(r->rack).size();
            j["ann"] = a;
            j["components"] = st.components;
            j["normalized"] = Rational(count, checked_pow(a, st.components)).str();
        }
        emit(common, j);
        return 0;
    }

    if (inv->parsed()) {
        std::shared_ptr<RackRecipe> r;
        if (!i_rack.empty()) r = parse_rack_recipe(i_rack);
        auto c = parse_cocycle_recipe(i_cocycle, r);
        FramedBraid b = parse_braid(i_braid);
        WeightPolynomial P = weight_polynomial(c->phi, b, scan_options(common));
        emit(common, polynomial_to_json(P));
        return 0;
    }

    if (t1->parsed()) {
        if (t_sign != "+" && t_sign != "-") throw CLI::ValidationError("--sign must be + or -");
        if (t_p >= 7 && !common.allow_long)
            throw CLI::ValidationError("p >= 7 is long-running; pass --allow-long");
        if (t_p > 7)
            std::cerr << "note: p in {11,13} is out of desk scale for this enumeration\n";
        FiniteGroup K = build_sl2p(t_p);
        SkewRack X = product_rack(K, identity_hom(K));
        FramedBraid b = build_torus2(t_n, t_sign == "+" ? 1 : -1);
        json j;
        j["count"] = count_colorings(X, b, scan_options(common));
        emit(common, j);
        return 0;
    }

    if (lens->parsed()) {
        FramedBraid b = build_lens_chain(l_p, l_q);
        std::shared_ptr<RackRecipe> r;
        std::shared_ptr<CocycleRecipe> c;
        if (!l_cocycle.empty()) {
            if (!l_rack.empty()) r = parse_rack_recipe(l_rack);
            c = parse_cocycle_recipe(l_cocycle, r);
        } else {
            std::string spec = l_rack.empty() ? "normal_pair:K=cyclic:" + std::to_string(l_p) +
                                                    ",N=cyclic:" + std::to_string(l_p) + ",f=id"
                                              : l_rack;
            r = parse_rack_recipe(spec);
        }
        const SkewRack& X = c ? c->rack() : r->rack;
        DiagramStats st = closure_stats(b);
        json j;
        j["p"] = l_p;
        j["q"] = l_q;
        j["braid"] = serialize_braid(b);
        j["stats"] = stats_to_json(st);
        j["h1_divisors"] = smith_normal_form(st.linking);
        j["count"] = count_colorings(X, b, scan_options(common));
        if (c) j["polynomial"] = polynomial_to_json(weight_polynomial(c->phi, b, scan_options(common)));
        emit(common, j);
        return 0;
    }

    if (frt->parsed()) {
        auto r = parse_rack_recipe(f_rack);
        FrHarnessOptions o;
        o.trials = f_trials;
        o.max_strands = f_strands;
        o.max_letters = f_letters;
        o.seed = common.seed;
        o.scan = scan_options(common);
        CheckReport rep;
        if (f_cocycle.empty()) {
            rep = check_count_fr_invariance(r->rack, o);
        } else {
            auto c = parse_cocycle_recipe(f_cocycle, r);
            rep = check_cocycle_property_fr(c->phi, o);
        }
        json j;
        j["trials"] = f_trials;
        j["result"] = report_to_json(rep);
        emit(common, j);
        return rep.passed ? 0 : 1;
    }

    if (crit->parsed()) {
        FramedBraid b = parse_braid(cr_braid);
        if (cr_mode == "count") {
            auto r = parse_rack_recipe("normal_pair:K=" + cr_K + ",N=" + cr_N + ",f=id");
            if (!r->pair) throw CLI::ValidationError("count criterion needs a normal pair");
            CountCriterion out = criterion_count(*r->pair, b, scan_options(common));
            json j;
            j["ratio"] = out.ratio.str();
            j["bound"] = out.n_order;
            j["verdict"] = verdict_str(out.verdict);
            emit(common, j);
            return out.verdict == Verdict::kObstructed ? 1 : 0;
        }
        WeightCriterion out = criterion_weight(b, cr_k1, cr_k2, cr_k3, scan_options(common));
        json j;
        j["polynomial"] = polynomial_to_json(out.poly);
        j["verdict"] = verdict_str(out.verdict);
        emit(common, j);
        return out.verdict == Verdict::kObstructed ? 1 : 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
