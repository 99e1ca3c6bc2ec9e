#include "skewrack/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewrack {

namespace {

void require_involutive(const GroupHom& f, const char* what) {
    CheckReport r = verify_involutive_automorphism(f);
    if (!r.passed) throw std::invalid_argument(std::string(what) + ": " + r.describe());
}

} // namespace

SkewRack conjugation_rack(const FiniteGroup& G, const GroupHom& kappa) {
    require_involutive(kappa, "conjugation rack kappa");
    const int n = G.order();
    if (n > SkewRack::kTableCap) throw std::invalid_argument("group too large for table rack");
    std::vector<uint16_t> op((size_t)n * n);
    std::vector<int> kap(n), rho(n);
    for (int x = 0; x < n; ++x) {
        kap[x] = kappa(x);
        rho[x] = G.inv(x);
        for (int y = 0; y < n; ++y)
            op[(size_t)x * n + y] = (uint16_t)G.mul(G.mul(kappa(G.inv(y)), x), y);
    }
    return SkewRack::from_tables(n, std::move(op), std::move(kap), rho);
}

SkewRack product_rack(const FiniteGroup& K, const GroupHom& f) {
    require_involutive(f, "product rack f");
    const int k = K.order();
    std::vector<uint16_t> fmap(k);
    for (int x = 0; x < k; ++x) fmap[x] = (uint16_t)f(x);
    SkewRack computed = SkewRack::product_of_group(K.mult_table(), K.inv_table(), fmap);
    if ((long long)k * k <= SkewRack::kTableCap) {
        // small enough: dense tables are faster and serializable
        return SkewRack::from_tables(computed.size(), computed.op_table(),
                                     computed.kappa_perm(), computed.rho_perm());
    }
    return computed;
}

DeltaRackResult delta_rack(const FiniteGroup& G, const GroupHom& kappa,
                           const std::vector<int>& delta,
                           const std::optional<std::vector<int>>& rho) {
    require_involutive(kappa, "delta rack kappa");
    const int n = G.order();
    if ((int)delta.size() != n) throw std::invalid_argument("delta map has wrong size");
    for (int x = 0; x < n; ++x)
        if (kappa(delta[x]) != delta[kappa(x)])
            throw std::invalid_argument("delta does not commute with kappa");

    DeltaRackResult out;
    DeltaCertificate& c = out.cert;

    // key identity: delta(x)delta(y) = delta(y)delta(x delta(y))
    c.key_identity = true;
    for (int x = 0; x < n && c.key_identity; ++x)
        for (int y = 0; y < n; ++y) {
            int lhs = G.mul(delta[x], delta[y]);
            int rhs = G.mul(delta[y], delta[G.mul(x, delta[y])]);
            if (lhs != rhs) {
                c.key_identity = false;
                c.key_witness = {x, y};
                break;
            }
        }
    if (!c.key_identity) return out;

    std::vector<int> image;
    std::vector<int> fiber_count(n, 0);
    for (int x = 0; x < n; ++x) ++fiber_count[delta[x]];
    for (int d = 0; d < n; ++d)
        if (fiber_count[d]) image.push_back(d);
    c.image_size = (int)image.size();
    c.image_subgroup = G.is_subgroup(image);
    c.fiber_size = fiber_count[image[0]];
    c.fibers_equal = true;
    for (int d : image)
        if (fiber_count[d] != c.fiber_size) c.fibers_equal = false;
    c.image_commutative = true;
    for (int a : image)
        for (int b : image)
            if (G.mul(a, b) != G.mul(b, a)) c.image_commutative = false;

    if (n > SkewRack::kTableCap) throw std::invalid_argument("group too large for table rack");
    std::vector<uint16_t> op((size_t)n * n);
    std::vector<int> kap(n);
    for (int x = 0; x < n; ++x) {
        kap[x] = kappa(x);
        for (int y = 0; y < n; ++y)
            op[(size_t)x * n + y] = (uint16_t)G.mul(kappa(x), delta[y]);
    }
    out.rack = SkewRack::from_tables(n, std::move(op), std::move(kap), rho);
    return out;
}

std::vector<int> twisted_conjugacy_delta(const FiniteGroup& G, const GroupHom& f) {
    require_involutive(f, "twisted conjugacy f");
    const int n = G.order();
    std::vector<int> delta(n);
    for (int x = 0; x < n; ++x) delta[x] = G.mul(f(G.inv(x)), x);

    int fixed = 0;
    for (int h = 0; h < n; ++h)
        if (f(h) == h) ++fixed;
    std::vector<int> fiber_count(n, 0);
    for (int x = 0; x < n; ++x) ++fiber_count[delta[x]];
    for (int d = 0; d < n; ++d)
        if (fiber_count[d] && fiber_count[d] != fixed)
            throw std::runtime_error("twisted conjugacy fiber size != |Fix(f)|");
    return delta;
}

NormalPairRack normal_pair_rack(const FiniteGroup& K, const std::vector<int>& N,
                                const GroupHom& f) {
    require_involutive(f, "normal pair f");
    if (!K.is_normal(N)) throw std::invalid_argument("N is not a normal subgroup of K");
    const int k = K.order(), m = (int)N.size();
    std::vector<int> pos_in_n(k, -1);
    for (int i = 0; i < m; ++i) pos_in_n[N[i]] = i;
    for (int a : N)
        if (pos_in_n[f(a)] < 0) throw std::invalid_argument("f does not preserve N");
    int id_pos = pos_in_n[K.id()];
    if (id_pos < 0) throw std::invalid_argument("N must contain the identity");

    // G = K x N as a table group; element (x, N[i]) has index x*m + i
    const long long order = (long long)k * m;
    if (order > FiniteGroup::kOrderCap) throw std::invalid_argument("K x N exceeds group cap");
    std::vector<uint16_t> mult((size_t)order * order);
    for (int x = 0; x < k; ++x)
        for (int i = 0; i < m; ++i)
            for (int y = 0; y < k; ++y)
                for (int j = 0; j < m; ++j)
                    mult[(size_t)(x * m + i) * order + y * m + j] =
                        (uint16_t)(K.mul(x, y) * m + pos_in_n[K.mul(N[i], N[j])]);

    NormalPairRack out;
    out.K = K;
    out.G = FiniteGroup(std::move(mult));
    out.n_elems = N;

    GroupHom kap;
    kap.source = kap.target = &out.G;
    kap.map.resize(order);
    std::vector<int> rho(order), delta_idx(order);
    for (int x = 0; x < k; ++x)
        for (int i = 0; i < m; ++i) {
            int idx = x * m + i;
            kap.map[idx] = f(x) * m + pos_in_n[f(N[i])];
            rho[idx] = f(x) * m + pos_in_n[K.inv(f(N[i]))];
            int conj = K.mul(K.mul(K.inv(x), N[i]), x);
            delta_idx[idx] = conj * m + id_pos;  // (x^-1 a x, 1)
        }

    DeltaRackResult dr = delta_rack(out.G, kap, delta_idx, rho);
    if (!dr.rack || !dr.cert.certified())
        throw std::runtime_error("normal pair construction failed certification");
    if (dr.cert.image_size != m || dr.cert.fiber_size != k)
        throw std::runtime_error("normal pair certificate has unexpected shape");
    out.rack = std::move(*dr.rack);
    out.cert = dr.cert;
    return out;
}

BirackCocycle lambda_theta_cocycle(const NormalPairRack& R, const GroupHom& f,
                                   const std::vector<int>& lambda, const Group2Cocycle& theta) {
    CheckReport rt = verify_group_2cocycle(theta);
    if (!rt.passed) throw std::invalid_argument("theta rejected: " + rt.describe());
    const FiniteAbelianGroup& A = theta.coeff;
    if (A.rank() != 1)
        throw std::invalid_argument("lambda-theta cocycle needs cyclic ring coefficients");

    const FiniteGroup& K = *theta.group;
    const int k = K.order();
    const int m = (int)R.n_elems.size();
    if ((int)lambda.size() != m) throw std::invalid_argument("lambda size != |N|");
    if (R.rack.size() != k * m) throw std::invalid_argument("rack/group size mismatch");
    // lambda must be additive on N (1-cocycle for the trivial action)
    std::vector<int> pos_in_n(k, -1);
    for (int i = 0; i < m; ++i) pos_in_n[R.n_elems[i]] = i;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int ij = pos_in_n[K.mul(R.n_elems[i], R.n_elems[j])];
            if (lambda[ij] != A.add(lambda[i], lambda[j]))
                throw std::invalid_argument("lambda rejected: not additive on N");
        }

    const int n = k * m;
    BirackCocycle phi;
    phi.rack = &R.rack;
    phi.coeff = A;
    phi.table.assign((size_t)n * n, 0);
    for (int x = 0; x < k; ++x)
        for (int yi = 0; yi < m; ++yi) {
            const int lam = lambda[yi];  // residue in the cyclic ring
            for (int z = 0; z < k; ++z) {
                const int zin = K.inv(z);
                const int fxz = K.mul(f(x), zin);
                const int base = A.add(theta(f(x), zin), A.neg(theta(z, zin)));
                for (int wi = 0; wi < m; ++wi) {
                    const int w = R.n_elems[wi];
                    int val = A.add(base, theta(fxz, K.mul(w, z)));
                    val = A.add(val, theta(w, z));
                    phi.table[(size_t)(x * m + yi) * n + (z * m + wi)] = A.scale(val, lam);
                }
            }
        }
    return phi;
}

std::shared_ptr<ModPCocycle> mod_p_symmetric_cocycle(int p, int eps) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +-1");
    auto out = std::make_shared<ModPCocycle>();
    FiniteGroup Zp = build_cyclic(p);
    GroupHom f = eps == 1 ? identity_hom(Zp) : negation_hom(Zp);
    std::vector<int> all(p);
    for (int i = 0; i < p; ++i) all[i] = i;
    out->pair = normal_pair_rack(Zp, all, f);

    // need theta on the group K embedded in the pair; rebuild against the
    // pair's own copy of Z/p via plain residue arithmetic
    Group2Cocycle th = fermat_quotient_cocycle(Zp, p, eps);
    const FiniteAbelianGroup& A = th.coeff;
    const int n = out->pair.rack.size();

    BirackCocycle phi;
    phi.rack = &out->pair.rack;
    phi.coeff = A;
    phi.table.assign((size_t)n * n, 0);
    for (int x = 0; x < p; ++x)
        for (int y = 0; y < p; ++y)
            for (int z = 0; z < p; ++z)
                for (int w = 0; w < p; ++w)
                    phi.table[(size_t)(x * p + y) * n + (z * p + w)] =
                        (int)((2LL * y * th(x, w)) % p);
    out->phi = std::move(phi);
    return out;
}

std::shared_ptr<Z2Cocycle> bilinear_z2_cocycle(int k1, int k2, int k3) {
    for (int v : {k1, k2, k3})
        if (v != 0 && v != 1) throw std::invalid_argument("coefficients must be in Z/2");
    auto out = std::make_shared<Z2Cocycle>();
    FiniteGroup Z2 = build_cyclic(2);
    out->pair = normal_pair_rack(Z2, {0, 1}, identity_hom(Z2));
    const int n = out->pair.rack.size();  // 4
    BirackCocycle phi;
    phi.rack = &out->pair.rack;
    phi.coeff = FiniteAbelianGroup::cyclic(2);
    phi.table.assign((size_t)n * n, 0);
    for (int x = 0; x < 2; ++x)
        for (int a = 0; a < 2; ++a)
            for (int y = 0; y < 2; ++y)
                for (int b = 0; b < 2; ++b)
                    phi.table[(size_t)(x * 2 + a) * n + (y * 2 + b)] =
                        (k1 * a + k2 * b + k3 * a * b) % 2;
    out->phi = std::move(phi);
    return out;
}

} // namespace skewrack
