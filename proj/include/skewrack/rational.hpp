#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skewrack {

// Exact rational with int64 parts; enough headroom for normalized
// coloring counts (numerators < 2^63, denominators are |Ann|^components).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num * o.den < (__int128)o.num * den;
    }

    Rational operator+(const Rational& o) const {
        __int128 n = (__int128)num * o.den + (__int128)o.num * den;
        __int128 d = (__int128)den * o.den;
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational overflow");
        Rational r; r.num = (long long)n; r.den = (long long)d; r.reduce();
        return r;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
};

// a^e with overflow check, for |Ann|^components style denominators.
inline long long checked_pow(long long a, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (a != 0 && r > INT64_MAX / a) throw std::overflow_error("pow overflow");
        r *= a;
    }
    return r;
}

} // namespace skewrack
