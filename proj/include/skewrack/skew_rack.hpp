#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skewrack/report.hpp"

namespace skewrack {

// Finite skew-rack (X, <|, kappa) with optional good involution rho.
//
// Two storage backends behind one interface:
//  * table: dense n x n operation tables, used whenever n <= kTableCap;
//  * product: X = K x K with (x,a) <| (y,b) = (f(x) y^-1 b y, f(a)),
//    computed from the multiplication table of K.  Needed because the
//    SL2(F_p) product racks for p >= 5 have |X| in the tens of thousands
//    and a dense |X|^2 table would not fit in memory.
class SkewRack {
public:
    static constexpr int kTableCap = 2048;

    SkewRack() = default;

    // Table-backed rack.  op[a][b] = a <| b as flat n*n arrays.
    static SkewRack from_tables(int n, std::vector<uint16_t> op,
                                std::vector<int> kappa,
                                std::optional<std::vector<int>> rho);

    // Product rack on K x K from the multiplication table of K and an
    // involutive automorphism f (validated by the caller).
    static SkewRack product_of_group(const std::vector<uint16_t>& kmul,
                                     const std::vector<uint16_t>& kinv,
                                     const std::vector<uint16_t>& fmap);

    int size() const { return n_; }
    bool is_table() const { return !op_.empty(); }
    bool has_rho() const { return has_rho_; }

    inline int op(int a, int b) const {
        if (!op_.empty()) return op_[(size_t)a * n_ + b];
        // (x,p) <| (y,q): K-part f(x) * (y^-1 q y), N-part f(p)
        int x = divk(a), p = a - x * k_;
        int y = divk(b), q = b - y * k_;
        int t = kmul_[(size_t)kmul_[(size_t)kinv_[y] * k_ + q] * k_ + y];
        return (int)kmul_[(size_t)fmap_[x] * k_ + t] * k_ + fmap_[p];
    }

    inline int op_inv(int a, int b) const {
        if (!opinv_.empty()) return opinv_[(size_t)a * n_ + b];
        // z with z <| (y,q) = (x,p):  z = (f(x * (y^-1 q y)^-1), f(p))
        int x = divk(a), p = a - x * k_;
        int y = divk(b), q = b - y * k_;
        int t = kmul_[(size_t)kmul_[(size_t)kinv_[y] * k_ + q] * k_ + y];
        return (int)fmap_[kmul_[(size_t)x * k_ + kinv_[t]]] * k_ + fmap_[p];
    }

    inline int kappa(int a) const {
        if (!kappa_.empty()) return kappa_[a];
        int x = divk(a);
        return (int)fmap_[x] * k_ + fmap_[a - x * k_];
    }

    inline int kappa_inv(int a) const {
        if (!kappa_inv_.empty()) return kappa_inv_[a];
        return kappa(a);  // product backend: f is involutive
    }

    inline int rho(int a) const {
        if (!rho_.empty()) return rho_[a];
        // product backend: rho(x,p) = (f(x), f(p)^-1)
        int x = divk(a);
        return (int)fmap_[x] * k_ + kinv_[fmap_[a - x * k_]];
    }

    bool kappa_involutive() const;

    // Serializable dense view; throws if the rack is too large to tabulate.
    std::vector<uint16_t> op_table() const;
    std::vector<int> kappa_perm() const;
    std::optional<std::vector<int>> rho_perm() const;

    bool same_tables(const SkewRack& o) const;

private:
    inline int divk(int a) const { return (int)(((uint64_t)a * kmagic_) >> 40); }
    void seal_tables();

    int n_ = 0;
    std::vector<uint16_t> op_, opinv_;     // table backend
    std::vector<int> kappa_, kappa_inv_, rho_;
    // product backend
    std::vector<uint16_t> kmul_, kinv_, fmap_;
    int k_ = 0;
    uint64_t kmagic_ = 0;
    bool has_rho_ = false;
};

// --- axiom verification --------------------------------------------------

// (SR1) kappa(a<|b) = kappa(a)<|kappa(b); (SR2) -<|b bijective with a
// consistent inverse table; (SR3) (a<|b)<|c = (a<|kappa(c))<|(b<|c).
CheckReport verify_skew_rack(const SkewRack& X);

// (SS1) (a<|b)<|rho(b) = a and rho(a)<|kappa(b) = rho(a<|b);
// (SS2) rho^2 = kappa^2 = id and rho kappa = kappa rho.
CheckReport verify_good_involution(const SkewRack& X);

// Twist map x -> kappa(x) <|^-1 kappa(x); requires kappa^2 = id.  The
// inverse map x -> kappa(x) <| x is checked elementwise.
std::vector<int> tw_map(const SkewRack& X);

// (((x <| a1) <| a2) ... ) <| an
int apply_sequence(const SkewRack& X, const std::vector<int>& seq, int x);

// Ann(X) = { x : x <| kappa(x) = kappa(x) }
std::vector<int> ann(const SkewRack& X);

// Signed annihilator sets of the sequence map A_{a1..an}; kappa powers are
// reduced mod 2 (kappa is involutive for symmetric racks).
std::vector<int> ann_eps(const SkewRack& X, const std::vector<int>& seq, int eps);

struct PropertyFrOptions {
    int n_max = 2;
    long long budget = 200000;  // max sequences enumerated per length
    unsigned seed = 0;          // sampling seed when |X|^n exceeds budget
    int threads = 0;            // 0 = library default
};

// Bounded check of Property FR: for every sequence length 0..n_max,
// (FR1) |Ann^eps(A_seq)| == |Ann(X)| != 0 and (FR2) the two stabilization
// identities hold for every member of the signed Ann sets.
CheckReport check_property_fr(const SkewRack& X, const PropertyFrOptions& opt = {});

// Subgroup of Bij(X) generated by kappa(-)<|a and the two-step maps
// (- <|^e1 a1) <|^e2 a2; grown by breadth-first closure under composition.
struct InnEvenGroup {
    std::vector<std::vector<int>> elements;  // permutations of 0..n-1
};

class InnEvenOverflow : public std::runtime_error {
public:
    explicit InnEvenOverflow(size_t cap)
        : std::runtime_error("inner-even group exceeds cap " + std::to_string(cap)) {}
};

InnEvenGroup inn_even(const SkewRack& X, size_t cap = 200000);

// x <|^e kappa(x) == x <|^e (x . g) for all x, g, e.
CheckReport check_f_link_homotopic(const SkewRack& X, size_t cap = 200000);

} // namespace skewrack
