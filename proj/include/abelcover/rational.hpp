#pragma once

#include <string>

#include "abelcover/errors.hpp"

namespace abelcover {

// Exact rational numbers over 64-bit integers, always kept normalized
// (gcd(num,den)=1, den>0). Every fractional quantity in the engine goes
// through this type; floating point is never used.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat operator-() const { return Rat(-num, den); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;
    bool operator<=(const Rat& o) const { return *this < o || *this == o; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    // largest integer <= value
    long long floor() const;
    // value reduced mod 1 into [0,1)
    Rat frac() const;
    // exact integer value; throws InputError otherwise
    long long as_integer() const;

    Rat abs() const { return num < 0 ? -*this : *this; }

    std::string str() const;
};

}  // namespace abelcover
