#include "skewrack/cocycle.hpp"

#include <stdexcept>

namespace skewrack {

namespace {
void check_shape(const BirackCocycle& phi) {
    if (!phi.rack) throw std::invalid_argument("cocycle has no rack");
    size_t n = (size_t)phi.rack->size();
    if (phi.table.size() != n * n) throw std::invalid_argument("cocycle table shape mismatch");
    for (int v : phi.table)
        if (v < 0 || v >= phi.coeff.order())
            throw std::invalid_argument("cocycle entry outside coefficient group");
}
} // namespace

CheckReport verify_birack_cocycle(const BirackCocycle& phi) {
    check_shape(phi);
    const SkewRack& X = *phi.rack;
    const FiniteAbelianGroup& A = phi.coeff;
    const int n = X.size();
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
            if (phi(b, c) != phi(X.kappa(b), X.kappa(c)))
                return CheckReport::fail("cocycle-kappa", {b, c});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ab = X.op(a, b);
            for (int c = 0; c < n; ++c) {
                int lhs = A.add(phi(a, b), phi(ab, c));
                int rhs = A.add(phi(a, X.kappa(c)), phi(X.op(a, X.kappa(c)), X.op(b, c)));
                if (lhs != rhs) return CheckReport::fail("cocycle", {a, b, c});
            }
        }
    return CheckReport::ok();
}

CheckReport verify_symmetric_cocycle(const BirackCocycle& phi) {
    check_shape(phi);
    const SkewRack& X = *phi.rack;
    if (!X.has_rho()) throw std::invalid_argument("symmetric cocycle check needs rho");
    const FiniteAbelianGroup& A = phi.coeff;
    const int n = X.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (phi(a, b) != A.neg(phi(X.op(a, b), X.rho(b))))
                return CheckReport::fail("symmetric-undo", {a, b});
            if (phi(a, b) != A.neg(phi(X.rho(a), X.kappa(b))))
                return CheckReport::fail("symmetric-rho", {a, b});
        }
    return CheckReport::ok();
}

SkewRack extend_by_cocycle(const BirackCocycle& phi) {
    check_shape(phi);
    const SkewRack& X = *phi.rack;
    const FiniteAbelianGroup& A = phi.coeff;
    const int n = X.size(), m = A.order();
    const long long nn = (long long)n * m;
    if (nn > SkewRack::kTableCap) throw std::invalid_argument("extension rack too large");
    std::vector<uint16_t> op((size_t)nn * nn);
    std::vector<int> kap(nn);
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < m; ++a) {
            int xi = x * m + a;
            kap[xi] = X.kappa(x) * m + a;
            for (int y = 0; y < n; ++y)
                for (int b = 0; b < m; ++b)
                    op[(size_t)xi * nn + y * m + b] =
                        (uint16_t)(X.op(x, y) * m + A.add(a, phi(x, y)));
        }
    return SkewRack::from_tables((int)nn, std::move(op), std::move(kap), std::nullopt);
}

BirackCocycle symmetrize_cocycle(const BirackCocycle& phi) {
    check_shape(phi);
    const SkewRack& X = *phi.rack;
    if (!X.has_rho()) throw std::invalid_argument("symmetrization needs rho");
    CheckReport c = verify_birack_cocycle(phi);
    if (!c.passed) throw std::invalid_argument("symmetrize rejected: " + c.describe());
    const FiniteAbelianGroup& A = phi.coeff;
    const int n = X.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (phi(a, b) != A.neg(phi(X.rho(a), X.kappa(b))))
                throw std::invalid_argument("symmetrize rejected: phi(a,b) != -phi(rho a, kappa b) at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
    BirackCocycle out;
    out.rack = phi.rack;
    out.coeff = A;
    out.table.assign((size_t)n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out.table[(size_t)a * n + b] =
                A.add(phi(a, b), A.neg(phi(X.op(a, b), X.rho(b))));
    return out;
}

} // namespace skewrack
