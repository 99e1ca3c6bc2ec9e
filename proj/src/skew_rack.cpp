#include "skewrack/skew_rack.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewrack {

namespace {

std::vector<int> invert_perm(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = (int)i;
    return inv;
}

bool is_perm(const std::vector<int>& p, int n) {
    if ((int)p.size() != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

} // namespace

SkewRack SkewRack::from_tables(int n, std::vector<uint16_t> op,
                               std::vector<int> kappa,
                               std::optional<std::vector<int>> rho) {
    if (n <= 0 || n > kTableCap) throw std::invalid_argument("rack size out of range for tables");
    if ((int)op.size() != n * n) throw std::invalid_argument("rack op table has wrong shape");
    if (!is_perm(kappa, n)) throw std::invalid_argument("kappa is not a permutation");
    SkewRack X;
    X.n_ = n;
    X.op_ = std::move(op);
    for (uint16_t v : X.op_)
        if (v >= n) throw std::invalid_argument("rack op entry out of range");
    X.kappa_ = std::move(kappa);
    X.kappa_inv_ = invert_perm(X.kappa_);
    if (rho) {
        if (!is_perm(*rho, n)) throw std::invalid_argument("rho is not a permutation");
        X.rho_ = std::move(*rho);
        X.has_rho_ = true;
    }
    X.seal_tables();
    return X;
}

void SkewRack::seal_tables() {
    // Build the column-inverse table; fails loudly when some column of the
    // operation is not a bijection (callers surface this as SR2).
    opinv_.assign((size_t)n_ * n_, 0);
    std::vector<char> seen(n_);
    for (int b = 0; b < n_; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n_; ++a) {
            int c = op_[(size_t)a * n_ + b];
            seen[c] = 1;
            opinv_[(size_t)c * n_ + b] = (uint16_t)a;
        }
        for (int c = 0; c < n_; ++c)
            if (!seen[c]) {
                // keep a consistent (garbage) table; verify_skew_rack reports SR2
                opinv_[(size_t)c * n_ + b] = 0;
            }
    }
}

SkewRack SkewRack::product_of_group(const std::vector<uint16_t>& kmul,
                                    const std::vector<uint16_t>& kinv,
                                    const std::vector<uint16_t>& fmap) {
    SkewRack X;
    X.k_ = (int)kinv.size();
    if ((size_t)X.k_ * X.k_ != kmul.size() || fmap.size() != kinv.size())
        throw std::invalid_argument("product rack: inconsistent group tables");
    X.n_ = X.k_ * X.k_;
    X.kmul_ = kmul;
    X.kinv_ = kinv;
    X.fmap_ = fmap;
    X.kmagic_ = ((uint64_t)1 << 40) / X.k_ + 1;
    X.has_rho_ = true;
    return X;
}

bool SkewRack::kappa_involutive() const {
    for (int a = 0; a < n_; ++a)
        if (kappa(kappa(a)) != a) return false;
    return true;
}

std::vector<uint16_t> SkewRack::op_table() const {
    if (!op_.empty()) return op_;
    if (n_ > kTableCap) throw std::runtime_error("rack too large to tabulate");
    std::vector<uint16_t> t((size_t)n_ * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[(size_t)a * n_ + b] = (uint16_t)op(a, b);
    return t;
}

std::vector<int> SkewRack::kappa_perm() const {
    std::vector<int> t(n_);
    for (int a = 0; a < n_; ++a) t[a] = kappa(a);
    return t;
}

std::optional<std::vector<int>> SkewRack::rho_perm() const {
    if (!has_rho_) return std::nullopt;
    std::vector<int> t(n_);
    for (int a = 0; a < n_; ++a) t[a] = rho(a);
    return t;
}

bool SkewRack::same_tables(const SkewRack& o) const {
    if (n_ != o.n_ || has_rho_ != o.has_rho_) return false;
    for (int a = 0; a < n_; ++a) {
        if (kappa(a) != o.kappa(a)) return false;
        if (has_rho_ && rho(a) != o.rho(a)) return false;
        for (int b = 0; b < n_; ++b)
            if (op(a, b) != o.op(a, b)) return false;
    }
    return true;
}

// --- verification ---------------------------------------------------------

CheckReport verify_skew_rack(const SkewRack& X) {
    const int n = X.size();
    if (n <= 0) return CheckReport::fail("structure", {});

    // SR2: every column is a bijection and op_inv really inverts it.
    for (int b = 0; b < n; ++b) {
        std::vector<char> seen(n, 0);
        for (int a = 0; a < n; ++a) {
            int c = X.op(a, b);
            if (c < 0 || c >= n || seen[c]) return CheckReport::fail("SR2", {a, b});
            seen[c] = 1;
        }
        for (int a = 0; a < n; ++a)
            if (X.op(X.op_inv(a, b), b) != a) return CheckReport::fail("SR2-inv", {a, b});
    }

    // SR1
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (X.kappa(X.op(a, b)) != X.op(X.kappa(a), X.kappa(b)))
                return CheckReport::fail("SR1", {a, b});

    // SR3, the expensive cube; scanned in parallel with the lowest failing
    // triple reported.
    const long long none = (long long)n * n * n;
    long long bad = none;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : bad)
#endif
    for (int a = 0; a < n; ++a) {
        long long local = none;
        for (int b = 0; b < n && local == none; ++b) {
            int ab = X.op(a, b);
            for (int c = 0; c < n; ++c) {
                if (X.op(ab, c) != X.op(X.op(a, X.kappa(c)), X.op(b, c))) {
                    local = ((long long)a * n + b) * n + c;
                    break;
                }
            }
        }
        if (local < bad) bad = local;
    }
    if (bad < none) {
        long long c = bad % n, b = (bad / n) % n, a = bad / n / n;
        return CheckReport::fail("SR3", {a, b, c});
    }
    return CheckReport::ok();
}

CheckReport verify_good_involution(const SkewRack& X) {
    if (!X.has_rho()) throw std::invalid_argument("rack has no rho");
    const int n = X.size();
    for (int a = 0; a < n; ++a) {
        if (X.rho(X.rho(a)) != a) return CheckReport::fail("SS2-rho", {a});
        if (X.kappa(X.kappa(a)) != a) return CheckReport::fail("SS2-kappa", {a});
        if (X.rho(X.kappa(a)) != X.kappa(X.rho(a))) return CheckReport::fail("SS2-comm", {a});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (X.op(X.op(a, b), X.rho(b)) != a) return CheckReport::fail("SS1-undo", {a, b});
            if (X.op(X.rho(a), X.kappa(b)) != X.rho(X.op(a, b)))
                return CheckReport::fail("SS1-shift", {a, b});
        }
    return CheckReport::ok();
}

std::vector<int> tw_map(const SkewRack& X) {
    if (!X.kappa_involutive()) throw std::invalid_argument("tw_map needs kappa^2 = id");
    const int n = X.size();
    std::vector<int> tw(n);
    for (int a = 0; a < n; ++a) tw[a] = X.op_inv(X.kappa(a), X.kappa(a));
    for (int a = 0; a < n; ++a)
        if (tw[X.op(X.kappa(a), a)] != a)
            throw std::runtime_error("twist map inverse identity failed; not a skew-rack?");
    return tw;
}

int apply_sequence(const SkewRack& X, const std::vector<int>& seq, int x) {
    for (int a : seq) x = X.op(x, a);
    return x;
}

std::vector<int> ann(const SkewRack& X) {
    std::vector<int> out;
    for (int x = 0; x < X.size(); ++x)
        if (X.op(x, X.kappa(x)) == X.kappa(x)) out.push_back(x);
    return out;
}

namespace {
inline int kpow(const SkewRack& X, int x, long long e) { return (e & 1) ? X.kappa(x) : x; }
} // namespace

std::vector<int> ann_eps(const SkewRack& X, const std::vector<int>& seq, int eps) {
    if (!X.kappa_involutive()) throw std::invalid_argument("ann_eps needs kappa^2 = id");
    const long long n = (long long)seq.size();
    std::vector<int> out;
    for (int x = 0; x < X.size(); ++x) {
        int ax = apply_sequence(X, seq, x);
        int kx = kpow(X, x, n + 1);
        bool in;
        if (eps >= 0)
            in = kx == X.op(ax, kx);
        else
            in = X.op(kx, X.kappa(ax)) == ax;
        if (in) out.push_back(x);
    }
    return out;
}

namespace {

// FR2: the two identities quantified over members of the signed Ann sets.
bool fr2_holds(const SkewRack& X, const std::vector<int>& seq,
               const std::vector<int>& ann_pos, const std::vector<int>& ann_neg,
               std::vector<long long>* witness) {
    const long long n = (long long)seq.size();
    for (long long i = 1; i <= n; ++i) {
        const int ai = seq[i - 1];
        const int lhs_base = kpow(X, ai, n + i);
        const int ki1 = kpow(X, ai, i + 1);
        for (int x : ann_pos) {
            if (lhs_base != apply_sequence(X, seq, X.op(ki1, x))) {
                if (witness) *witness = {i, x};
                return false;
            }
        }
        for (int y : ann_neg) {
            std::vector<int> twisted(seq.size());
            for (size_t j = 0; j < seq.size(); ++j)
                twisted[j] = X.op(seq[j], kpow(X, y, (long long)j + 1));
            if (X.op(lhs_base, kpow(X, y, n + 1)) != apply_sequence(X, twisted, ki1)) {
                if (witness) *witness = {i, y};
                return false;
            }
        }
    }
    return true;
}

} // namespace

CheckReport check_property_fr(const SkewRack& X, const PropertyFrOptions& opt) {
    if (opt.n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (!X.kappa_involutive()) return CheckReport::fail("SS2-kappa", {});
    const size_t ann_size = ann(X).size();
    if (ann_size == 0) return CheckReport::fail("FR1-empty", {});

    const int n = X.size();
#ifdef _OPENMP
    int old_threads = omp_get_max_threads();
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

    CheckReport result = CheckReport::ok();
    for (int len = 0; len <= opt.n_max && result.passed; ++len) {
        double total_d = 1;
        for (int i = 0; i < len; ++i) total_d *= n;
        const bool exhaustive = total_d <= (double)opt.budget;
        const long long total = exhaustive ? (long long)total_d : opt.budget;

        long long bad = total;  // sentinel: lowest failing sequence index wins
#ifdef _OPENMP
#pragma omp parallel
#endif
        {
            std::vector<int> seq(len);
            std::mt19937 rng;
            long long local_bad = total;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 64)
#endif
            for (long long t = 0; t < total; ++t) {
                if (t >= local_bad) continue;
                if (exhaustive) {
                    long long v = t;
                    for (int i = 0; i < len; ++i) { seq[i] = (int)(v % n); v /= n; }
                } else {
                    rng.seed(opt.seed + (unsigned)t * 2654435761u);
                    for (int i = 0; i < len; ++i) seq[i] = (int)(rng() % n);
                }
                std::vector<int> ap = ann_eps(X, seq, +1);
                std::vector<int> am = ann_eps(X, seq, -1);
                if (ap.size() != ann_size || am.size() != ann_size) { local_bad = t; continue; }
                if (!fr2_holds(X, seq, ap, am, nullptr)) local_bad = t;
            }
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (local_bad < bad) bad = local_bad;
            }
        }

        if (bad < total) {
            // Rebuild the offending sequence for the report.
            std::vector<int> seq(len);
            if (exhaustive) {
                long long v = bad;
                for (int i = 0; i < len; ++i) { seq[i] = (int)(v % n); v /= n; }
            } else {
                std::mt19937 rng(opt.seed + (unsigned)bad * 2654435761u);
                for (int i = 0; i < len; ++i) seq[i] = (int)(rng() % n);
            }
            std::vector<int> ap = ann_eps(X, seq, +1);
            std::vector<int> am = ann_eps(X, seq, -1);
            std::vector<long long> w(seq.begin(), seq.end());
            if (ap.size() != ann_size || am.size() != ann_size)
                result = CheckReport::fail("FR1", w);
            else {
                std::vector<long long> extra;
                fr2_holds(X, seq, ap, am, &extra);
                w.insert(w.end(), extra.begin(), extra.end());
                result = CheckReport::fail("FR2", w);
            }
        }
    }

#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(old_threads);
#endif
    return result;
}

// --- inner-even group ------------------------------------------------------

namespace {
struct PermHash {
    size_t operator()(const std::vector<int>& p) const {
        size_t h = 1469598103934665603ull;
        for (int v : p) { h ^= (size_t)v + 0x9e3779b97f4a7c15ull; h *= 1099511628211ull; }
        return h;
    }
};
} // namespace

InnEvenGroup inn_even(const SkewRack& X, size_t cap) {
    const int n = X.size();
    // the 4n^2 + n generator candidates usually collapse to a handful of
    // distinct permutations; dedupe before the closure
    std::unordered_set<std::vector<int>, PermHash> gen_set;
    std::vector<int> p(n);

    for (int a = 0; a < n; ++a) {
        for (int x = 0; x < n; ++x) p[x] = X.op(X.kappa(x), a);
        gen_set.insert(p);
    }
    for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2)
            for (int a1 = 0; a1 < n; ++a1)
                for (int a2 = 0; a2 < n; ++a2) {
                    for (int x = 0; x < n; ++x) {
                        int y = e1 ? X.op_inv(x, a1) : X.op(x, a1);
                        p[x] = e2 ? X.op_inv(y, a2) : X.op(y, a2);
                    }
                    gen_set.insert(p);
                }
    std::vector<std::vector<int>> gens(gen_set.begin(), gen_set.end());
    std::sort(gens.begin(), gens.end());

    // Breadth-first closure under composition; a finite set of bijections
    // closed under composition already contains inverses and the identity.
    std::unordered_set<std::vector<int>, PermHash> seen;
    std::vector<std::vector<int>> queue;
    std::vector<int> idperm(n);
    for (int i = 0; i < n; ++i) idperm[i] = i;
    seen.insert(idperm);
    queue.push_back(idperm);
    for (size_t head = 0; head < queue.size(); ++head) {
        std::vector<int> cur = queue[head];
        for (const auto& g : gens) {
            std::vector<int> nxt(n);
            for (int x = 0; x < n; ++x) nxt[x] = g[cur[x]];  // right action: x.(cur g)
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw InnEvenOverflow(cap);
                queue.push_back(std::move(nxt));
            }
        }
    }

    InnEvenGroup G;
    G.elements.assign(seen.begin(), seen.end());
    std::sort(G.elements.begin(), G.elements.end());
    return G;
}

CheckReport check_f_link_homotopic(const SkewRack& X, size_t cap) {
    if (!X.kappa_involutive()) throw std::invalid_argument("needs kappa^2 = id");
    InnEvenGroup G = inn_even(X, cap);
    const int n = X.size();
    for (int x = 0; x < n; ++x) {
        const int pos = X.op(x, X.kappa(x));
        const int neg = X.op_inv(x, X.kappa(x));
        for (size_t gi = 0; gi < G.elements.size(); ++gi) {
            int xg = G.elements[gi][x];
            if (X.op(x, xg) != pos) return CheckReport::fail("f-link(+1)", {x, (long long)gi});
            if (X.op_inv(x, xg) != neg) return CheckReport::fail("f-link(-1)", {x, (long long)gi});
        }
    }
    return CheckReport::ok();
}

} // namespace skewrack
