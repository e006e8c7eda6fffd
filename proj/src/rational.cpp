#include "abelcover/rational.hpp"

#include <numeric>

namespace abelcover {

Rat::Rat(long long n, long long d) : num(n), den(d) {
    if (den == 0)
        throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0)
        throw InputError("rational division by zero");
    return Rat(num * o.den, den * o.num);
}

bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

long long Rat::floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0)
        --q;
    return q;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

long long Rat::as_integer() const {
    if (den != 1)
        throw InputError("rational " + str() + " is not an integer");
    return num;
}

std::string Rat::str() const {
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace abelcover
