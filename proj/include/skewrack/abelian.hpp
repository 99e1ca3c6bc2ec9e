#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrack {

// Finite abelian group Z/m1 x ... x Z/mk.  Elements are dense indices in
// mixed radix; coefficient arithmetic for cocycle weights goes through
// precomputed add/neg tables so the hot loop stays table-driven.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    // order capped so the dense add table stays small
    static constexpr int kOrderCap = 2048;

    explicit FiniteAbelianGroup(std::vector<int> moduli) : torsion_(std::move(moduli)) {
        order_ = 1;
        for (int m : torsion_) {
            if (m < 1) throw std::invalid_argument("abelian group: modulus must be >= 1");
            if (order_ > kOrderCap / m) throw std::invalid_argument("abelian group too large");
            order_ *= m;
        }
        build_tables();
    }

    static FiniteAbelianGroup cyclic(int m) { return FiniteAbelianGroup(std::vector<int>{m}); }

    int order() const { return order_; }
    const std::vector<int>& torsion() const { return torsion_; }
    int rank() const { return (int)torsion_.size(); }

    int add(int a, int b) const { return add_[(size_t)a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int zero() const { return 0; }

    int scale(int a, long long k) const {
        k %= order_ ? order_ : 1;  // cheap bound; componentwise below is exact
        std::vector<int> t = tuple(a);
        for (size_t i = 0; i < t.size(); ++i) {
            long long v = (long long)t[i] * k % torsion_[i];
            if (v < 0) v += torsion_[i];
            t[i] = (int)v;
        }
        return index(t);
    }

    std::vector<int> tuple(int a) const {
        std::vector<int> t(torsion_.size());
        for (int i = (int)torsion_.size() - 1; i >= 0; --i) {
            t[i] = a % torsion_[i];
            a /= torsion_[i];
        }
        return t;
    }

    int index(const std::vector<int>& t) const {
        if ((int)t.size() != rank()) throw std::invalid_argument("abelian element arity mismatch");
        int a = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            int v = t[i] % torsion_[i];
            if (v < 0) v += torsion_[i];
            a = a * torsion_[i] + v;
        }
        return a;
    }

    std::string label(int a) const {
        std::vector<int> t = tuple(a);
        std::string s = "(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s + ")";
    }

    bool operator==(const FiniteAbelianGroup& o) const { return torsion_ == o.torsion_; }

private:
    void build_tables() {
        add_.assign((size_t)order_ * order_, 0);
        neg_.assign(order_, 0);
        std::vector<int> ta(rank()), tb(rank()), tc(rank());
        for (int a = 0; a < order_; ++a) {
            ta = tuple(a);
            for (int i = 0; i < rank(); ++i) tc[i] = (torsion_[i] - ta[i]) % torsion_[i];
            neg_[a] = index(tc);
            for (int b = 0; b < order_; ++b) {
                tb = tuple(b);
                for (int i = 0; i < rank(); ++i) tc[i] = (ta[i] + tb[i]) % torsion_[i];
                add_[(size_t)a * order_ + b] = index(tc);
            }
        }
    }

    std::vector<int> torsion_;
    int order_ = 1;
    std::vector<int> add_;
    std::vector<int> neg_;
};

} // namespace skewrack
