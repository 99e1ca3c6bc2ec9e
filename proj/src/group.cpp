#include "skewrack/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewrack {

FiniteGroup::FiniteGroup(std::vector<uint16_t> mult, std::vector<std::string> labels) {
    size_t nn = mult.size();
    int n = 0;
    while ((size_t)n * n < nn) ++n;
    if ((size_t)n * n != nn || n == 0) throw std::invalid_argument("group table not square");
    if (n > kOrderCap) throw std::invalid_argument("group order exceeds cap");
    n_ = n;
    mult_ = std::move(mult);
    for (uint16_t v : mult_)
        if (v >= n) throw std::invalid_argument("group table entry out of range");

    // identity
    id_ = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) { id_ = e; break; }
    }
    if (id_ < 0) throw std::invalid_argument("group has no identity");

    // inverses
    inv_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int found = -1;
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == id_ && mul(y, x) == id_) { found = y; break; }
        if (found < 0) throw std::invalid_argument("group element lacks inverse");
        inv_[x] = (uint16_t)found;
    }

    // associativity; the cube gets big for SL2(F_13) at order 2184
    bool assoc = true;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(&& : assoc) if (n > 256)
#endif
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = mul(a, b);
            for (int c = 0; c < n; ++c)
                if (mul(ab, c) != mul(a, mul(b, c))) {
                    assoc = false;
                    break;
                }
        }
    }
    if (!assoc) throw std::invalid_argument("group table not associative");

    if (!labels.empty() && (int)labels.size() != n)
        throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

bool FiniteGroup::abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != id_) { x = mul(x, a); ++k; }
    return k;
}

long long FiniteGroup::count_order_dividing(long long d) const {
    if (d == 0) return n_;
    long long c = 0;
    for (int x = 0; x < n_; ++x)
        if (d % element_order(x) == 0) ++c;
    return c;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
    std::vector<char> in(n_, 0);
    for (int e : elems) in[e] = 1;
    if (!in[id_]) return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[mul(a, b)]) return false;
    return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
    if (!is_subgroup(elems)) return false;
    std::vector<char> in(n_, 0);
    for (int e : elems) in[e] = 1;
    for (int g = 0; g < n_; ++g)
        for (int h : elems)
            if (!in[mul(mul(g, h), inv(g))]) return false;
    return true;
}

FiniteGroup build_cyclic(int m) {
    if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
    if (m > FiniteGroup::kOrderCap) throw std::invalid_argument("cyclic order exceeds cap");
    std::vector<uint16_t> t((size_t)m * m);
    std::vector<std::string> lab(m);
    for (int a = 0; a < m; ++a) {
        lab[a] = std::to_string(a);
        for (int b = 0; b < m; ++b) t[(size_t)a * m + b] = (uint16_t)((a + b) % m);
    }
    return FiniteGroup(std::move(t), std::move(lab));
}

namespace {

std::vector<std::vector<int>> all_perms(int k) {
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string cycle_label(const std::vector<int>& p) {
    std::string s;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == (int)i) continue;
        s += '(';
        size_t j = i;
        do {
            s += std::to_string(j + 1);
            seen[j] = 1;
            j = p[j];
        } while (j != i);
        s += ')';
    }
    return s.empty() ? "e" : s;
}

int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<char> seen(p.size(), 0);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        do { seen[j] = 1; j = p[j]; ++len; } while (j != i);
        if (len % 2 == 0) s = -s;
    }
    return s;
}

} // namespace

FiniteGroup build_symmetric(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("symmetric group supported for k <= 6");
    auto perms = all_perms(k);
    const int n = (int)perms.size();
    // composition (p*q)(i) = p(q(i)); lexicographic index lookup by search
    std::vector<uint16_t> t((size_t)n * n);
    std::vector<std::string> lab(n);
    for (int a = 0; a < n; ++a) {
        lab[a] = cycle_label(perms[a]);
        for (int b = 0; b < n; ++b) {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
            int idx = (int)(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
            t[(size_t)a * n + b] = (uint16_t)idx;
        }
    }
    return FiniteGroup(std::move(t), std::move(lab));
}

std::vector<int> alternating_subgroup(const FiniteGroup& sym, int k) {
    auto perms = all_perms(k);
    if ((int)perms.size() != sym.order()) throw std::invalid_argument("not Sym(k)");
    std::vector<int> out;
    for (size_t i = 0; i < perms.size(); ++i)
        if (perm_sign(perms[i]) == 1) out.push_back((int)i);
    return out;
}

std::vector<int> cyclic_subgroup(const FiniteGroup& cyc, int d) {
    int m = cyc.order();
    if (d < 1 || m % d != 0) throw std::invalid_argument("subgroup order must divide group order");
    std::vector<int> out;
    for (int i = 0; i < d; ++i) out.push_back(i * (m / d));
    std::sort(out.begin(), out.end());
    return out;
}

FiniteGroup build_sl2p(int p) {
    static const int primes[] = {2, 3, 5, 7, 11, 13};
    bool ok = false;
    for (int q : primes) ok |= q == p;
    if (!ok) throw std::invalid_argument("sl2p needs a prime p <= 13");

    // enumerate 2x2 matrices over F_p with det 1
    struct M { int a, b, c, d; };
    std::vector<M> els;
    std::vector<int> lookup((size_t)p * p * p * p, -1);
    auto key = [p](int a, int b, int c, int d) {
        return ((a * p + b) * p + c) * p + d;
    };
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d)
                    if ((a * d - b * c % p + p * p) % p == 1 % p) {
                        lookup[key(a, b, c, d)] = (int)els.size();
                        els.push_back({a, b, c, d});
                    }
    const int n = (int)els.size();
    if (n != p * (p * p - 1)) throw std::runtime_error("sl2 enumeration has wrong order");
    std::vector<uint16_t> t((size_t)n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const M& x = els[i];
            const M& y = els[j];
            int a = (x.a * y.a + x.b * y.c) % p;
            int b = (x.a * y.b + x.b * y.d) % p;
            int c = (x.c * y.a + x.d * y.c) % p;
            int d = (x.c * y.b + x.d * y.d) % p;
            t[(size_t)i * n + j] = (uint16_t)lookup[key(a, b, c, d)];
        }
    return FiniteGroup(std::move(t));
}

GroupHom identity_hom(const FiniteGroup& G) {
    GroupHom f;
    f.source = f.target = &G;
    f.map.resize(G.order());
    std::iota(f.map.begin(), f.map.end(), 0);
    return f;
}

GroupHom negation_hom(const FiniteGroup& G) {
    GroupHom f;
    f.source = f.target = &G;
    f.map.resize(G.order());
    for (int x = 0; x < G.order(); ++x) f.map[x] = G.inv(x);
    return f;
}

CheckReport verify_involutive_automorphism(const GroupHom& f) {
    if (f.source != f.target || !f.source) throw std::invalid_argument("endomorphism expected");
    const FiniteGroup& G = *f.source;
    const int n = G.order();
    if ((int)f.map.size() != n) return CheckReport::fail("hom-shape", {});
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
        int y = f.map[x];
        if (y < 0 || y >= n || seen[y]) return CheckReport::fail("not-bijective", {x});
        seen[y] = 1;
    }
    for (int x = 0; x < n; ++x)
        if (f.map[f.map[x]] != x) return CheckReport::fail("not-involutive", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (f.map[G.mul(x, y)] != G.mul(f.map[x], f.map[y]))
                return CheckReport::fail("not-homomorphism", {x, y});
    return CheckReport::ok();
}

CheckReport verify_group_2cocycle(const Group2Cocycle& theta) {
    const FiniteGroup& G = *theta.group;
    const FiniteAbelianGroup& A = theta.coeff;
    const int n = G.order();
    for (int x = 0; x < n; ++x)
        if (theta(G.id(), x) != A.zero() || theta(x, G.id()) != A.zero())
            return CheckReport::fail("not-normalized", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = G.mul(x, y);
            for (int z = 0; z < n; ++z) {
                int lhs = A.add(theta(x, y), theta(xy, z));
                int rhs = A.add(theta(x, G.mul(y, z)), theta(y, z));
                if (lhs != rhs) return CheckReport::fail("2-cocycle", {x, y, z});
            }
        }
    return CheckReport::ok();
}

CheckReport verify_group_1cocycle(const Group1Cocycle& lam) {
    const FiniteGroup& G = *lam.group;
    const FiniteAbelianGroup& A = lam.coeff;
    for (int x = 0; x < G.order(); ++x)
        for (int y = 0; y < G.order(); ++y)
            if (lam(G.mul(x, y)) != A.add(lam(x), lam(y)))
                return CheckReport::fail("1-cocycle", {x, y});
    return CheckReport::ok();
}

FiniteGroup central_extension(const FiniteGroup& K, const FiniteAbelianGroup& A,
                              const Group2Cocycle& theta) {
    if (theta.group != &K || !(theta.coeff == A))
        throw std::invalid_argument("cocycle/base mismatch");
    CheckReport r = verify_group_2cocycle(theta);
    if (!r.passed) throw std::invalid_argument("central extension rejected: " + r.describe());
    const int k = K.order(), m = A.order();
    const int n = k * m;
    if (n > FiniteGroup::kOrderCap) throw std::invalid_argument("extension exceeds group cap");
    std::vector<uint16_t> t((size_t)n * n);
    for (int x = 0; x < k; ++x)
        for (int a = 0; a < m; ++a)
            for (int y = 0; y < k; ++y)
                for (int b = 0; b < m; ++b) {
                    int xi = x * m + a, yi = y * m + b;
                    int kk = K.mul(x, y);
                    int aa = A.add(A.add(a, b), theta(x, y));
                    t[(size_t)xi * n + yi] = (uint16_t)(kk * m + aa);
                }
    return FiniteGroup(std::move(t));
}

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

int check_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("odd prime required");
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::invalid_argument("odd prime required");
    return p;
}

} // namespace

Group2Cocycle fermat_quotient_cocycle(const FiniteGroup& Zp, int p, int eps) {
    check_odd_prime(p);
    if (Zp.order() != p) throw std::invalid_argument("group is not Z/p");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    Group2Cocycle th;
    th.group = &Zp;
    th.coeff = FiniteAbelianGroup::cyclic(p);
    th.table.assign((size_t)p * p, 0);
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            long long ey = (long long)eps * y;
            long long num = ipow(x + ey, p) - ipow(x, p) - ipow(ey, p);
            if (num % p != 0) throw std::runtime_error("fermat quotient not divisible by p");
            long long v = (num / p) % p;
            if (v < 0) v += p;
            th.table[(size_t)x * p + y] = (int)v;
        }
    return th;
}

Group2Cocycle fermat_quotient_cocycle_sum_form(const FiniteGroup& Zp, int p, int eps) {
    check_odd_prime(p);
    if (Zp.order() != p) throw std::invalid_argument("group is not Z/p");
    Group2Cocycle th;
    th.group = &Zp;
    th.coeff = FiniteAbelianGroup::cyclic(p);
    th.table.assign((size_t)p * p, 0);
    std::vector<long long> inv(p, 0);
    for (int j = 1; j < p; ++j)
        for (int i = 1; i < p; ++i)
            if (i * j % p == 1) { inv[j] = i; break; }
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y) {
            long long ey = ((long long)eps * y % p + p) % p;
            long long acc = 0;
            for (int j = 1; j < p; ++j) {
                long long term = inv[j] * (ipow(x, j) % p) % p * (ipow(ey, p - j) % p) % p;
                acc = (acc + term) % p;
            }
            th.table[(size_t)x * p + y] = (int)acc;
        }
    return th;
}

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> M) {
    const int rows = (int)M.size();
    const int cols = rows ? (int)M[0].size() : 0;
    for (auto& r : M)
        if ((int)r.size() != cols) throw std::invalid_argument("ragged matrix");
    const int rank_cap = std::min(rows, cols);
    std::vector<long long> divs;

    int t = 0;
    while (t < rank_cap) {
        // find a nonzero pivot of least absolute value
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                long long v = M[i][j] < 0 ? -M[i][j] : M[i][j];
                if (v != 0 && (pi < 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;  // all zero
        std::swap(M[t], M[pi]);
        for (int i = 0; i < rows; ++i) std::swap(M[i][t], M[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i) {
                long long q = M[i][t] / M[t][t];
                if (q)
                    for (int j = t; j < cols; ++j) M[i][j] -= q * M[t][j];
                if (M[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(M[t], M[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                long long q = M[t][j] / M[t][t];
                if (q)
                    for (int i = t; i < rows; ++i) M[i][j] -= q * M[i][t];
                if (M[t][j] != 0) {
                    for (int i = t; i < rows; ++i) std::swap(M[i][t], M[i][j]);
                    clean = false;
                }
            }
        }
        ++t;
    }

    for (int i = 0; i < t; ++i) divs.push_back(M[i][i] < 0 ? -M[i][i] : M[i][i]);
    // enforce the divisibility chain d1 | d2 | ...
    for (int i = 0; i + 1 < (int)divs.size(); ++i)
        for (int j = i + 1; j < (int)divs.size(); ++j) {
            long long g = std::gcd(divs[i], divs[j]);
            long long l = divs[i] / g * divs[j];
            divs[i] = g;
            divs[j] = l;
        }
    while ((int)divs.size() < rank_cap) divs.push_back(0);
    return divs;
}

long long hom_count_abelian(const std::vector<long long>& divisors, const FiniteGroup& K) {
    if (!K.abelian()) throw std::invalid_argument("hom counting needs abelian K");
    long long total = 1;
    for (long long d : divisors) total *= K.count_order_dividing(d);
    return total;
}

} // namespace skewrack
