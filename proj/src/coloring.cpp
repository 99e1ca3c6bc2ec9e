#include "skewrack/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewrack {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

// Crossing relations, with downward orientation and inputs on top:
//   positive:  out_l = kappa(in_r),   out_r = in_l <| in_r
//   negative:  in_l  = kappa(out_r),  in_r  = out_l <| out_r
// (the negative crossing is the stacked inverse of the positive one).
// Each letter therefore contributes one kappa relation u = kappa(v) and one
// operation relation res = a1 <| a2; both are derivable in every direction
// the rack supports in O(1): kappa both ways, res from (a1,a2), a1 from
// (res,a2).  Solving for a2 would need inversion in the second argument,
// which table racks do not carry, so the compiler waits or branches there.
EnumerationPlan compile_plan(const FramedBraid& b) {
    const int s = b.strands;
    const int L = (int)b.letters.size();

    // raw semi-arc variables: s tops, then 2 per letter (out_l, out_r)
    int raw = s + 2 * L;
    std::vector<int> cur(s);
    std::iota(cur.begin(), cur.end(), 0);
    struct RawCross {
        int in_l, in_r, out_l, out_r, sign;
    };
    std::vector<RawCross> rawx(L);
    int next = s;
    for (int i = 0; i < L; ++i) {
        const auto& l = b.letters[i];
        rawx[i] = {cur[l.pos], cur[l.pos + 1], next, next + 1, l.sign};
        cur[l.pos] = next;
        cur[l.pos + 1] = next + 1;
        next += 2;
    }

    // closure: bottom position p is the same semi-arc as top position p
    UnionFind uf(raw);
    for (int p = 0; p < s; ++p) uf.unite(cur[p], p);

    std::vector<int> canon(raw, -1);
    int n_vars = 0;
    for (int v = 0; v < raw; ++v) {
        int r = uf.find(v);
        if (canon[r] < 0) canon[r] = n_vars++;
        canon[v] = canon[r];
    }

    EnumerationPlan plan;
    plan.n_vars = n_vars;
    plan.top_vars.resize(s);
    for (int p = 0; p < s; ++p) plan.top_vars[p] = canon[p];
    plan.crossings.resize(L);
    for (int i = 0; i < L; ++i)
        plan.crossings[i] = {canon[rawx[i].in_l], canon[rawx[i].in_r], canon[rawx[i].out_l],
                             canon[rawx[i].out_r], rawx[i].sign};

    std::vector<char> known(n_vars, 0);
    std::vector<char> done_a(L, 0), done_b(L, 0);
    std::vector<EnumerationPlan::Step> pending;

    auto emit = [&](EnumerationPlan::Opcode op, int dst, int s1, int s2, bool check) {
        pending.push_back({op, (uint8_t)(check ? 1 : 0), dst, s1, s2});
        if (!check) known[dst] = 1;
    };

    // one propagation sweep over the crossing relations; with emit = false
    // it only marks reachability (used by the branch-choice lookahead)
    auto sweep = [&](std::vector<char>& kn, std::vector<char>& da, std::vector<char>& db,
                     bool do_emit) -> bool {
        bool fired = false;
        for (int i = 0; i < L; ++i) {
            const auto& c = plan.crossings[i];
            if (!da[i]) {
                // u = kappa(v)
                const int u = c.sign > 0 ? c.out_l : c.in_l;
                const int v = c.sign > 0 ? c.in_r : c.out_r;
                if (kn[v]) {
                    if (do_emit) emit(EnumerationPlan::kKappa, u, v, -1, kn[u]);
                    kn[u] = 1;
                    da[i] = 1;
                    fired = true;
                } else if (kn[u]) {
                    if (do_emit) emit(EnumerationPlan::kKappaInv, v, u, -1, false);
                    kn[v] = 1;
                    da[i] = 1;
                    fired = true;
                }
            }
            if (!db[i]) {
                // res = a1 <| a2
                const int res = c.sign > 0 ? c.out_r : c.in_r;
                const int a1 = c.sign > 0 ? c.in_l : c.out_l;
                const int a2 = c.sign > 0 ? c.in_r : c.out_r;
                if (kn[a1] && kn[a2]) {
                    if (do_emit) emit(EnumerationPlan::kOp, res, a1, a2, kn[res]);
                    kn[res] = 1;
                    db[i] = 1;
                    fired = true;
                } else if (kn[res] && kn[a2]) {
                    if (do_emit) emit(EnumerationPlan::kOpInv, a1, res, a2, false);
                    kn[a1] = 1;
                    db[i] = 1;
                    fired = true;
                }
            }
        }
        return fired;
    };

    // full propagation closure from a candidate branch set; returns true
    // when every semi-arc is reached
    auto covers_all = [&](const std::vector<int>& branch_set) {
        std::vector<char> kn(n_vars, 0), da(L, 0), db(L, 0);
        for (int v : branch_set) kn[v] = 1;
        while (sweep(kn, da, db, false)) {}
        for (char k : kn)
            if (!k) return false;
        return true;
    };

    // first pass: branch unknown tops in position order
    std::vector<int> branch_set;
    {
        std::vector<char> kn(n_vars, 0), da(L, 0), db(L, 0);
        while (sweep(kn, da, db, false)) {}
        for (int p = 0; p < s; ++p) {
            int v = plan.top_vars[p];
            if (kn[v]) continue;
            kn[v] = 1;
            branch_set.push_back(v);
            while (sweep(kn, da, db, false)) {}
        }
    }
    // minimize: drop any branch variable the others derive.  Position order
    // can be blind to long forcing chains (an encircling component or a
    // kinked base word reroutes the closure around the stabilized strands),
    // and every removed variable shrinks the scan space by a factor of |X|.
    for (bool shrunk = true; shrunk;) {
        shrunk = false;
        for (size_t i = branch_set.size(); i-- > 0;) {
            std::vector<int> rest = branch_set;
            rest.erase(rest.begin() + i);
            if (covers_all(rest)) {
                branch_set = std::move(rest);
                shrunk = true;
                break;
            }
        }
    }

    while (sweep(known, done_a, done_b, true)) {}
    if (!pending.empty()) throw std::logic_error("plan: steps before first branch");
    for (int v : branch_set) {
        if (known[v]) throw std::logic_error("plan: redundant branch variable");
        known[v] = 1;
        plan.branch_vars.push_back(v);
        pending.clear();
        while (sweep(known, done_a, done_b, true)) {}
        plan.steps.push_back(pending);
    }
    for (int i = 0; i < L; ++i)
        if (!done_a[i] || !done_b[i]) throw std::logic_error("plan: unfired crossing relation");
    for (int v = 0; v < n_vars; ++v)
        if (!known[v]) throw std::logic_error("plan: unreached semi-arc");

    plan.steps_per_leaf = plan.steps.empty() ? 0 : (long long)plan.steps.back().size();
    return plan;
}

namespace {

inline bool run_step(const SkewRack& X, const EnumerationPlan::Step& st, int32_t* vals) {
    int r;
    switch (st.op) {
        case EnumerationPlan::kKappa: r = X.kappa(vals[st.s1]); break;
        case EnumerationPlan::kKappaInv: r = X.kappa_inv(vals[st.s1]); break;
        case EnumerationPlan::kOp: r = X.op(vals[st.s1], vals[st.s2]); break;
        default: r = X.op_inv(vals[st.s1], vals[st.s2]); break;
    }
    if (st.is_check) return r == vals[st.dst];
    vals[st.dst] = r;
    return true;
}

struct ScanState {
    const SkewRack& X;
    const EnumerationPlan& plan;
    long long budget;
    long long flush_at;
    std::atomic<long long> work{0};
    std::atomic<bool> abort{false};
    std::atomic<long long> outer_done{0};
};

inline void flush_work(ScanState& ss, long long& local_work) {
    if (ss.work.fetch_add(local_work) + local_work > ss.budget) ss.abort.store(true);
    local_work = 0;
}

template <class Leaf>
void scan_from(ScanState& ss, int depth, int32_t* vals, long long& local_work, Leaf& visit) {
    const int n = ss.X.size();
    const auto& steps = ss.plan.steps[depth];
    const int bv = ss.plan.branch_vars[depth];
    const bool leaf = depth + 1 == (int)ss.plan.branch_vars.size();
    for (int v = 0; v < n; ++v) {
        vals[bv] = v;
        local_work += (long long)steps.size();
        bool ok = true;
        for (const auto& st : steps)
            if (!run_step(ss.X, st, vals)) { ok = false; break; }
        if (ok) {
            if (leaf)
                visit(vals);
            else
                scan_from(ss, depth + 1, vals, local_work, visit);
        }
        if (local_work >= ss.flush_at) {
            flush_work(ss, local_work);
            if (ss.abort.load(std::memory_order_relaxed)) return;
        }
        if (!leaf && ss.abort.load(std::memory_order_relaxed)) return;
    }
}

// Runs the compiled plan over all branch values; `make_leaf()` builds one
// leaf functor per thread (its destructor must merge any local state).
// Throws BudgetExceeded with progress when the step budget runs out.
template <class LeafFactory>
void scan_all(const SkewRack& X, const EnumerationPlan& plan, const ScanOptions& opt,
              LeafFactory&& make_leaf) {
    if (plan.branch_vars.empty()) throw std::logic_error("plan has no branch variables");
    ScanState ss{X, plan, opt.budget, std::min<long long>(1 << 20, opt.budget / 4 + 1)};
    const int n = X.size();

    auto outer = [&](int v0, int32_t* vals, auto& leaf, long long& local_work) {
        vals[plan.branch_vars[0]] = v0;
        local_work += (long long)plan.steps[0].size();
        bool ok = true;
        for (const auto& st : plan.steps[0])
            if (!run_step(X, st, vals)) { ok = false; break; }
        if (ok) {
            if (plan.branch_vars.size() == 1)
                leaf(vals);
            else
                scan_from(ss, 1, vals, local_work, leaf);
        }
        flush_work(ss, local_work);
        ss.outer_done.fetch_add(1, std::memory_order_relaxed);
    };

#ifdef _OPENMP
    if (opt.parallel) {
        int old = omp_get_max_threads();
        if (opt.threads > 0) omp_set_num_threads(opt.threads);
#pragma omp parallel
        {
            std::vector<int32_t> vals(plan.n_vars, 0);
            auto leaf = make_leaf();
            long long local_work = 0;
#pragma omp for schedule(dynamic, 1)
            for (int v0 = 0; v0 < n; ++v0) {
                if (ss.abort.load(std::memory_order_relaxed)) continue;
                outer(v0, vals.data(), leaf, local_work);
            }
        }
        if (opt.threads > 0) omp_set_num_threads(old);
        if (ss.abort.load()) throw BudgetExceeded(ss.outer_done.load(), n, opt.budget);
        return;
    }
#endif

    std::vector<int32_t> vals(plan.n_vars, 0);
    auto leaf = make_leaf();
    long long local_work = 0;
    for (int v0 = 0; v0 < n; ++v0) {
        outer(v0, vals.data(), leaf, local_work);
        if (ss.abort.load(std::memory_order_relaxed))
            throw BudgetExceeded(ss.outer_done.load(), n, opt.budget);
    }
}

} // namespace

long long count_colorings(const SkewRack& X, const FramedBraid& b, const ScanOptions& opt) {
    EnumerationPlan plan = compile_plan(b);
    std::atomic<long long> total{0};
    struct Counter {
        std::atomic<long long>* sink;
        long long c = 0;
        explicit Counter(std::atomic<long long>* s) : sink(s) {}
        Counter(const Counter& o) : sink(o.sink) {}
        Counter& operator=(const Counter&) = delete;
        void operator()(const int32_t*) { ++c; }
        ~Counter() { sink->fetch_add(c); }
    };
    scan_all(X, plan, opt, [&]() { return Counter(&total); });
    return total.load();
}

long long count_colorings_serial(const SkewRack& X, const FramedBraid& b,
                                 const ScanOptions& opt) {
    ScanOptions o = opt;
    o.parallel = false;
    return count_colorings(X, b, o);
}

Rational normalized_count(const SkewRack& X, const FramedBraid& b, const ScanOptions& opt) {
    const long long a = (long long)ann(X).size();
    if (a == 0) throw std::domain_error("normalization needs nonempty Ann(X)");
    DiagramStats st = closure_stats(b);
    return Rational(count_colorings(X, b, opt), checked_pow(a, st.components));
}

void for_each_coloring(const SkewRack& X, const FramedBraid& b,
                       const std::function<void(const Coloring&)>& fn, const ScanOptions& opt) {
    EnumerationPlan plan = compile_plan(b);
    ScanOptions o = opt;
    o.parallel = false;
    struct Emit {
        const EnumerationPlan* plan;
        const std::function<void(const Coloring&)>* fn;
        void operator()(const int32_t* vals) {
            Coloring c;
            c.top.resize(plan->top_vars.size());
            for (size_t p = 0; p < plan->top_vars.size(); ++p)
                c.top[p] = vals[plan->top_vars[p]];
            c.crossings.resize(plan->crossings.size());
            for (size_t i = 0; i < plan->crossings.size(); ++i) {
                const auto& x = plan->crossings[i];
                c.crossings[i] = {vals[x.in_l], vals[x.in_r], vals[x.out_l], vals[x.out_r]};
            }
            (*fn)(c);
        }
    };
    scan_all(X, plan, o, [&]() { return Emit{&plan, &fn}; });
}

std::vector<Coloring> enumerate_colorings(const SkewRack& X, const FramedBraid& b,
                                          const ScanOptions& opt) {
    std::vector<Coloring> out;
    for_each_coloring(X, b, [&](const Coloring& c) { out.push_back(c); }, opt);
    return out;
}

std::vector<long long> weight_histogram(const SkewRack& X, const FramedBraid& b,
                                        const std::vector<int>& phi_table, int coeff_order,
                                        const std::vector<int>& coeff_add,
                                        const std::vector<int>& coeff_neg,
                                        const ScanOptions& opt) {
    EnumerationPlan plan = compile_plan(b);
    const int n = X.size();
    if ((long long)phi_table.size() != (long long)n * n)
        throw std::invalid_argument("weight table shape mismatch");

    std::vector<long long> hist(coeff_order, 0);
    std::atomic<long long>* cells = nullptr;
    std::vector<std::atomic<long long>> atomic_hist(coeff_order);
    for (auto& a : atomic_hist) a.store(0);
    cells = atomic_hist.data();

    struct Acc {
        const EnumerationPlan* plan;
        const int* phi;
        const int* add;
        const int* neg;
        std::atomic<long long>* sink;
        int n, m;
        std::vector<long long> local;

        Acc(const EnumerationPlan* p, const int* f, const int* a, const int* g,
            std::atomic<long long>* s, int nn, int mm)
            : plan(p), phi(f), add(a), neg(g), sink(s), n(nn), m(mm), local(mm, 0) {}
        Acc(const Acc& o) : Acc(o.plan, o.phi, o.add, o.neg, o.sink, o.n, o.m) {}
        Acc& operator=(const Acc&) = delete;

        void operator()(const int32_t* vals) {
            int acc = 0;
            // crossing weights enter against the generator sign: a positive
            // generator contributes -phi(top pair), a negative one +phi of
            // its bottom pair.  The overall orientation of the weight sum is
            // pinned by the mod-p lens-space values in the test suite.
            for (const auto& c : plan->crossings) {
                int w = c.sign > 0 ? neg[phi[(size_t)vals[c.in_l] * n + vals[c.in_r]]]
                                   : phi[(size_t)vals[c.out_l] * n + vals[c.out_r]];
                acc = add[(size_t)acc * m + w];
            }
            ++local[acc];
        }
        ~Acc() {
            for (int i = 0; i < m; ++i)
                if (local[i]) sink[i].fetch_add(local[i]);
        }
    };

    scan_all(X, plan, opt, [&]() {
        return Acc(&plan, phi_table.data(), coeff_add.data(), coeff_neg.data(), cells, n,
                   coeff_order);
    });
    for (int i = 0; i < coeff_order; ++i) hist[i] = atomic_hist[i].load();
    return hist;
}

std::pair<int, int> slice_apply(const SkewRack& X, int sign, int left, int right) {
    if (sign > 0) return {X.kappa(right), X.op(left, right)};
    int orr = X.kappa_inv(left);
    return {X.op_inv(right, orr), orr};
}

bool colors_close(const SkewRack& X, const FramedBraid& b, const std::vector<int>& top,
                  std::vector<Coloring::Arc>* trace) {
    if ((int)top.size() != b.strands) throw std::invalid_argument("top tuple arity mismatch");
    std::vector<int> state = top;
    if (trace) trace->clear();
    for (const auto& l : b.letters) {
        int u = state[l.pos], v = state[l.pos + 1];
        auto [ol, orr] = slice_apply(X, l.sign, u, v);
        if (trace) trace->push_back({u, v, ol, orr});
        state[l.pos] = ol;
        state[l.pos + 1] = orr;
    }
    return state == top;
}

CheckReport validate_coloring(const SkewRack& X, const FramedBraid& b, const Coloring& c) {
    if ((int)c.top.size() != b.strands || c.crossings.size() != b.letters.size())
        return CheckReport::fail("shape", {});
    std::vector<int> state = c.top;
    for (size_t i = 0; i < b.letters.size(); ++i) {
        const auto& l = b.letters[i];
        const auto& arc = c.crossings[i];
        if (state[l.pos] != arc.in_l || state[l.pos + 1] != arc.in_r)
            return CheckReport::fail("strand-continuity", {(long long)i});
        if (l.sign > 0) {
            if (arc.out_l != X.kappa(arc.in_r))
                return CheckReport::fail("crossing-kappa", {(long long)i});
            if (arc.out_r != X.op(arc.in_l, arc.in_r))
                return CheckReport::fail("crossing-op", {(long long)i});
        } else {
            if (arc.in_l != X.kappa(arc.out_r))
                return CheckReport::fail("crossing-kappa", {(long long)i});
            if (arc.in_r != X.op(arc.out_l, arc.out_r))
                return CheckReport::fail("crossing-op", {(long long)i});
        }
        state[l.pos] = arc.out_l;
        state[l.pos + 1] = arc.out_r;
    }
    for (int p = 0; p < b.strands; ++p)
        if (state[p] != c.top[p]) return CheckReport::fail("closure", {p});
    return CheckReport::ok();
}

} // namespace skewrack
