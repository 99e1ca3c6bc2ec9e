#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewrack/abelian.hpp"
#include "skewrack/report.hpp"

namespace skewrack {

// Multiplication-table group.  Group axioms are verified exhaustively at
// construction; downstream code can rely on mul/inv without re-checking.
class FiniteGroup {
public:
    static constexpr int kOrderCap = 4096;

    FiniteGroup() = default;
    FiniteGroup(std::vector<uint16_t> mult, std::vector<std::string> labels = {});

    int order() const { return n_; }
    int id() const { return id_; }
    inline int mul(int a, int b) const { return mult_[(size_t)a * n_ + b]; }
    inline int inv(int a) const { return inv_[a]; }
    const std::vector<uint16_t>& mult_table() const { return mult_; }
    const std::vector<uint16_t>& inv_table() const { return inv_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool abelian() const;
    int element_order(int a) const;
    // #{ x : x^d = 1 }; d = 0 counts everything.
    long long count_order_dividing(long long d) const;
    bool is_subgroup(const std::vector<int>& elems) const;
    bool is_normal(const std::vector<int>& elems) const;

    bool operator==(const FiniteGroup& o) const { return mult_ == o.mult_; }

private:
    int n_ = 0;
    int id_ = 0;
    std::vector<uint16_t> mult_, inv_;
    std::vector<std::string> labels_;
};

FiniteGroup build_cyclic(int m);
FiniteGroup build_symmetric(int k);       // k <= 6
FiniteGroup build_sl2p(int p);            // p prime <= 13, order p(p^2-1)

// Element indices of the alternating subgroup of build_symmetric(k).
std::vector<int> alternating_subgroup(const FiniteGroup& sym, int k);
// Unique subgroup of order d in build_cyclic(m), d | m.
std::vector<int> cyclic_subgroup(const FiniteGroup& cyc, int d);

// Homomorphism between table groups, given as an index map.
struct GroupHom {
    const FiniteGroup* source = nullptr;
    const FiniteGroup* target = nullptr;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

GroupHom identity_hom(const FiniteGroup& G);
GroupHom negation_hom(const FiniteGroup& G);  // x -> x^-1; automorphism iff G abelian

// Bijective homomorphism with f(f(x)) = x.
CheckReport verify_involutive_automorphism(const GroupHom& f);

// Normalized group 2-cocycle with coefficients in a finite abelian group:
// theta(x,y) - theta(x,yz) + theta(xy,z) - theta(y,z) = 0 and
// theta(1,x) = theta(x,1) = 0.
struct Group2Cocycle {
    const FiniteGroup* group = nullptr;
    FiniteAbelianGroup coeff;
    std::vector<int> table;  // n*n coefficient indices

    int operator()(int x, int y) const { return table[(size_t)x * group->order() + y]; }
};

// Additive map N -> A (group 1-cocycle for the trivial action).
struct Group1Cocycle {
    const FiniteGroup* group = nullptr;
    FiniteAbelianGroup coeff;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

CheckReport verify_group_2cocycle(const Group2Cocycle& theta);
CheckReport verify_group_1cocycle(const Group1Cocycle& lam);

// Central extension K x A with (x,a)(y,b) = (xy, a+b+theta(x,y)); group
// axioms re-verified at build, theta rejected if it fails verification.
FiniteGroup central_extension(const FiniteGroup& K, const FiniteAbelianGroup& A,
                              const Group2Cocycle& theta);

// theta(x,y) = ((x + eps*y)^p - x^p - (eps*y)^p) / p over Z/p, computed in
// exact integer arithmetic from lifts in {0..p-1} and reduced mod p.
Group2Cocycle fermat_quotient_cocycle(const FiniteGroup& Zp, int p, int eps);

// The same expression written as sum_{0<j<p} j^-1 x^j (eps y)^{p-j} mod p.
// Differs from the closed form by alternating signs when eps = +1; kept so
// the discrepancy stays pinned by tests.
Group2Cocycle fermat_quotient_cocycle_sum_form(const FiniteGroup& Zp, int p, int eps);

// Elementary divisors d1 | d2 | ... of an integer matrix (zeros padded for
// rank deficiency), by exact row/column reduction.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> M);

// |Hom(Z/d1 + ... + Z/dk, K)| for abelian K; a zero divisor contributes |K|.
long long hom_count_abelian(const std::vector<long long>& divisors, const FiniteGroup& K);

} // namespace skewrack
