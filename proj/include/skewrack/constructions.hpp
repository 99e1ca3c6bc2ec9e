#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "skewrack/cocycle.hpp"
#include "skewrack/group.hpp"
#include "skewrack/skew_rack.hpp"

namespace skewrack {

// Conjugation rack on a group: x <| y = kappa(y^-1) x y, rho(x) = x^-1.
SkewRack conjugation_rack(const FiniteGroup& G, const GroupHom& kappa);

// Product rack on K x K: (x,a) <| (y,b) = (f(x) y^-1 b y, f(a)),
// kappa = f x f, rho(x,a) = (f(x), f(a)^-1).  Table-backed when it fits,
// computed otherwise (SL2(F_p) racks for p >= 5 are far beyond table size).
SkewRack product_rack(const FiniteGroup& K, const GroupHom& f);

// Certificate for the x <| y = kappa(x) delta(y) construction.
struct DeltaCertificate {
    bool key_identity = false;      // delta(x)delta(y) = delta(y)delta(x delta(y))
    std::vector<long long> key_witness;
    bool image_subgroup = false;
    bool fibers_equal = false;
    bool image_commutative = false; // f-link-homotopy certificate
    int image_size = 0;
    int fiber_size = 0;

    bool certified() const { return key_identity && image_subgroup && fibers_equal; }
};

struct DeltaRackResult {
    std::optional<SkewRack> rack;  // absent when the key identity fails
    DeltaCertificate cert;
};

// Builds the rack x <| y = kappa(x) delta(y) and certifies the closure
// conditions that guarantee the Fenn-Rourke stability of its counting
// invariant.  rho, when given, is installed on the rack (and should be
// validated by the caller via verify_good_involution).
DeltaRackResult delta_rack(const FiniteGroup& G, const GroupHom& kappa,
                           const std::vector<int>& delta,
                           const std::optional<std::vector<int>>& rho = std::nullopt);

// delta(x) = f(x^-1) x; its fibers over the image all have size |Fix(f)|.
std::vector<int> twisted_conjugacy_delta(const FiniteGroup& G, const GroupHom& f);

// Rack on K x N (N normal in K, f(N) <= N) via delta(x,y) = (x^-1 y x, 1),
// kappa = f x f, rho(x,a) = (f(x), f(a)^-1).  The certificate asserts
// Im(delta) = N x 1 with fibers of size |K|.
struct NormalPairRack {
    SkewRack rack;
    FiniteGroup K;                  // the ambient group
    FiniteGroup G;                  // K x N as a table group
    std::vector<int> n_elems;       // the chosen subgroup, as K-indices
    DeltaCertificate cert;
};

NormalPairRack normal_pair_rack(const FiniteGroup& K, const std::vector<int>& N,
                                const GroupHom& f);

// Birack 2-cocycle on the K x N rack built from an additive map lambda on
// N and a normalized group 2-cocycle theta on K with cyclic coefficients:
//   phi((x,y),(z,w)) = lambda(y) * ( theta(f(x), z^-1)
//                                  + theta(f(x) z^-1, w z)
//                                  + theta(w, z) - theta(z, z^-1) ).
// lambda is given per subgroup position (aligned with R.n_elems) and is
// verified to be additive; theta must pass verify_group_2cocycle.  The
// theta(w,z) term follows the central-extension computation the formula
// abbreviates; a regression test pins this orientation on a nonabelian K.
BirackCocycle lambda_theta_cocycle(const NormalPairRack& R, const GroupHom& f,
                                   const std::vector<int>& lambda, const Group2Cocycle& theta);

// Closed form of the symmetrized lambda/theta cocycle on the cyclic rack
// K = N = Z/p with f(x) = eps*x:  phi_bar((x,y),(z,w)) = 2 y theta(x, w)
// where theta is the Fermat-quotient cocycle.
struct ModPCocycle {
    NormalPairRack pair;
    BirackCocycle phi;  // references pair.rack
};
// Heap-allocated so the cocycle's rack pointer stays valid across moves.
std::shared_ptr<ModPCocycle> mod_p_symmetric_cocycle(int p, int eps);

// phi_{k1,k2,k3}((x,a),(y,b)) = k1 a + k2 b + k3 ab over Z/2, on the
// (Z/2)^2 product rack.
struct Z2Cocycle {
    NormalPairRack pair;
    BirackCocycle phi;
};
std::shared_ptr<Z2Cocycle> bilinear_z2_cocycle(int k1, int k2, int k3);

} // namespace skewrack
