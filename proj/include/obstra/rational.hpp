#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace obstra {

// Exact rational scalar. Always canonical: gcd(num, den) == 1 and den > 0.
// GMP keeps mpq results canonical as long as inputs are canonical, so the
// wrapper only has to canonicalize at construction.
struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    Rat(long n) : v(n) {}
    Rat(long n, long d) : v(n, d) { v.canonicalize(); }
    explicit Rat(const mpq_class& q) : v(q) { v.canonicalize(); }
    explicit Rat(const mpz_class& n) : v(n) {}

    // Parses "p" or "p/q" with optional leading '-'. Throws Error(parse) on junk.
    static Rat parse(const std::string& text);

    mpz_class num() const { return v.get_num(); }
    mpz_class den() const { return v.get_den(); }

    int sign() const { return sgn(v); }
    bool is_integer() const { return v.get_den() == 1; }
    Rat abs() const { return Rat(mpq_class(::abs(v))); }

    // Serialized as "p" when integral, else "p/q".
    std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v + b.v)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v - b.v)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v * b.v)); }
    friend Rat operator/(const Rat& a, const Rat& b); // throws on b == 0
    Rat operator-() const { return Rat(mpq_class(-v)); }
    Rat& operator+=(const Rat& o) { v += o.v; return *this; }
    Rat& operator-=(const Rat& o) { v -= o.v; return *this; }
    Rat& operator*=(const Rat& o) { v *= o.v; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v <= b.v; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v > b.v; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v >= b.v; }
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a > b ? a : b; }

// Largest integer <= x, as a Rat.
Rat rat_floor(const Rat& x);

} // namespace obstra
