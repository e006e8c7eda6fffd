#include "abelcover/lattice.hpp"

#include <numeric>
#include <sstream>

namespace abelcover {

namespace {
void require_same_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw DimensionMismatch("divisor classes of rank " + std::to_string(a) + " and " +
                                std::to_string(b));
}
}  // namespace

bool DivisorClass::is_zero() const {
    for (long long x : c)
        if (x != 0)
            return false;
    return true;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_rank(rank(), o.rank());
    DivisorClass r = *this;
    for (std::size_t i = 0; i < c.size(); ++i)
        r.c[i] += o.c[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same_rank(rank(), o.rank());
    DivisorClass r = *this;
    for (std::size_t i = 0; i < c.size(); ++i)
        r.c[i] -= o.c[i];
    return r;
}

DivisorClass DivisorClass::operator-() const {
    DivisorClass r = *this;
    for (auto& x : r.c)
        x = -x;
    return r;
}

DivisorClass DivisorClass::operator*(long long k) const {
    DivisorClass r = *this;
    for (auto& x : r.c)
        x *= k;
    return r;
}

std::string DivisorClass::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ")";
    return os.str();
}

RationalClass::RationalClass(const DivisorClass& d) {
    c.reserve(d.c.size());
    for (long long x : d.c)
        c.emplace_back(x);
}

RationalClass RationalClass::operator+(const RationalClass& o) const {
    require_same_rank(rank(), o.rank());
    RationalClass r = *this;
    for (std::size_t i = 0; i < c.size(); ++i)
        r.c[i] += o.c[i];
    return r;
}

RationalClass RationalClass::operator*(const Rat& k) const {
    RationalClass r = *this;
    for (auto& x : r.c)
        x *= k;
    return r;
}

bool RationalClass::is_integral() const {
    for (const auto& x : c)
        if (!x.is_integer())
            return false;
    return true;
}

DivisorClass RationalClass::rounded() const {
    DivisorClass r;
    r.c.reserve(c.size());
    for (const auto& x : c)
        r.c.push_back(x.as_integer());
    return r;
}

long long RationalClass::common_denominator() const {
    long long l = 1;
    for (const auto& x : c)
        l = std::lcm(l, x.den);
    return l;
}

std::string RationalClass::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i].str();
    os << ")";
    return os.str();
}

}  // namespace abelcover
