#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator.
//
// All defect computations (|count - p*total| and friends) go through this
// type so that acceptance tolerances never absorb floating-point rounding.
// Comparisons cross-multiply in 128 bits; construction reduces by gcd.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hq {

struct Rat {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(|num|, den) == 1

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) {
        if (d == 0) throw std::invalid_argument("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        num = n / g;
        den = d / g;
    }

    friend Rat operator+(Rat a, Rat b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(Rat a, Rat b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }

    Rat abs() const { return num < 0 ? Rat(-num, den) : *this; }

    // Three-way comparison via 128-bit cross multiplication (no overflow for
    // any operands whose products fit in 127 bits, far beyond our ranges).
    friend int cmp(Rat a, Rat b) {
        __int128 lhs = (__int128)a.num * b.den;
        __int128 rhs = (__int128)b.num * a.den;
        return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
    }
    friend bool operator<(Rat a, Rat b) { return cmp(a, b) < 0; }
    friend bool operator<=(Rat a, Rat b) { return cmp(a, b) <= 0; }
    friend bool operator>(Rat a, Rat b) { return cmp(a, b) > 0; }
    friend bool operator>=(Rat a, Rat b) { return cmp(a, b) >= 0; }
    friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }

    double to_double() const { return double(num) / double(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num)
                        : std::to_string(num) + "/" + std::to_string(den);
    }
};

// A density p = a/b with 0 < a < b (strictly inside (0,1)), stored reduced.
struct RationalDensity {
    long long a = 1;
    long long b = 2;

    RationalDensity() = default;
    RationalDensity(long long a_, long long b_) {
        if (b_ <= 0 || a_ <= 0 || a_ >= b_)
            throw std::invalid_argument("RationalDensity: need 0 < a < b");
        long long g = std::gcd(a_, b_);
        a = a_ / g;
        b = b_ / g;
    }
    Rat rat() const { return Rat(a, b); }
};

}  // namespace hq
