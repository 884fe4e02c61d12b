#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator.
//
// Every value is kept normalized: den > 0, gcd(|num|, den) = 1.  All products
// and cross terms go through __int128; anything that would not fit back into
// 64 bits throws std::overflow_error instead of wrapping.  The magnitudes this
// project produces are tame (denominators divide p^r - 1 with r the order of a
// Weyl element), so the checks are a tripwire, not a cost.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace siegel {

using i64 = long long;
using i128 = __int128;

inline i64 checked_cast(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<i64>(v);
}

inline i64 checked_add(i64 a, i64 b) { return checked_cast(i128(a) + i128(b), "add"); }
inline i64 checked_mul(i64 a, i64 b) { return checked_cast(i128(a) * i128(b), "mul"); }

// gcd for __int128 magnitudes (std::gcd is not defined for __int128).
inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    return a;
}

struct Rat {
    i64 num = 0;
    i64 den = 1;

    Rat() = default;
    Rat(i64 n) : num(n), den(1) {}
    Rat(i64 n, i64 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        i64 g = std::gcd(n < 0 ? -n : n, d < 0 ? -d : d);
        if (g == 0) g = 1;
        n /= g; d /= g;
        if (d < 0) { n = -n; d = -d; }
        num = n; den = d;
    }

    static Rat from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        i128 g = gcd128(n, d);
        if (g == 0) g = 1;
        n /= g; d /= g;
        if (d < 0) { n = -n; d = -d; }
        Rat r;
        r.num = checked_cast(n, "rational numerator");
        r.den = checked_cast(d, "rational denominator");
        return r;
    }

    bool is_zero() const { return num == 0; }
    int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }

    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return from128(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return from128(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return from128(i128(a.num) * b.den, i128(a.den) * b.num);
    }

    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return i128(a.num) * b.den < i128(b.num) * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    // "num/den" in lowest terms, den > 0; integers print without "/1".
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// p^k with overflow check; used for the geometric sums p^0..p^(r-1).
inline i64 checked_pow(i64 base, int exp) {
    i64 acc = 1;
    for (int i = 0; i < exp; ++i) acc = checked_mul(acc, base);
    return acc;
}

} // namespace siegel
