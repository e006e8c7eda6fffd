#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abelcover/rational.hpp"

namespace abelcover {

// Divisor class with integer coordinates in the fixed basis of the Picard
// lattice of its surface. Purely numerical: the surface owns the basis and
// the intersection form.
struct DivisorClass {
    std::vector<long long> c;

    DivisorClass() = default;
    explicit DivisorClass(std::vector<long long> coeffs) : c(std::move(coeffs)) {}
    static DivisorClass zero(std::size_t rank) { return DivisorClass(std::vector<long long>(rank, 0)); }

    std::size_t rank() const { return c.size(); }
    bool is_zero() const;

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(long long k) const;
    DivisorClass& operator+=(const DivisorClass& o) { return *this = *this + o; }
    DivisorClass& operator-=(const DivisorClass& o) { return *this = *this - o; }

    bool operator==(const DivisorClass& o) const { return c == o.c; }
    bool operator!=(const DivisorClass& o) const { return c != o.c; }
    bool operator<(const DivisorClass& o) const { return c < o.c; }

    std::string str() const;
};

// Same, with exact rational coordinates (adjunction classes, K^2 input).
struct RationalClass {
    std::vector<Rat> c;

    RationalClass() = default;
    explicit RationalClass(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}
    explicit RationalClass(const DivisorClass& d);
    static RationalClass zero(std::size_t rank) { return RationalClass(std::vector<Rat>(rank)); }

    std::size_t rank() const { return c.size(); }

    RationalClass operator+(const RationalClass& o) const;
    RationalClass operator*(const Rat& k) const;
    RationalClass& operator+=(const RationalClass& o) { return *this = *this + o; }

    bool operator==(const RationalClass& o) const { return c == o.c; }

    // true when every coordinate is an integer
    bool is_integral() const;
    DivisorClass rounded() const;  // throws InputError unless integral

    // smallest positive integer clearing all denominators
    long long common_denominator() const;

    std::string str() const;
};

}  // namespace abelcover
