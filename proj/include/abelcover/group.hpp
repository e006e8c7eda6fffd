#pragma once

#include <vector>

#include "abelcover/rational.hpp"

namespace abelcover {

// Element or character of G = Z_{d1} x ... x Z_{dk}, as a coordinate tuple
// reduced mod the respective orders. Characters live in the dual group,
// identified with G through the pairing below; roots of unity are never
// materialized.
using Tuple = std::vector<long long>;

struct GroupSpec {
    std::vector<long long> orders;  // d1,...,dk, each >= 2

    GroupSpec() = default;
    explicit GroupSpec(std::vector<long long> ds);

    std::size_t ngens() const { return orders.size(); }
    long long size() const;
    long long exponent() const;

    Tuple zero() const { return Tuple(orders.size(), 0); }
    Tuple reduce(Tuple t) const;
    Tuple add(const Tuple& a, const Tuple& b) const;
    Tuple neg(const Tuple& a) const;
    Tuple scale(long long k, const Tuple& a) const;
    bool is_zero(const Tuple& a) const;

    // mixed-radix index in [0, size())
    long long index_of(const Tuple& t) const;
    Tuple element(long long index) const;

    bool operator==(const GroupSpec& o) const { return orders == o.orders; }
};

// order of v in G
long long order_of(const GroupSpec& g, const Tuple& v);

// <chi, v> = sum chi_j v_j / d_j mod 1, an exact rational in [0,1)
Rat pairing(const GroupSpec& g, const Tuple& chi, const Tuple& v);

// smallest r >= 0 with chi|_H = psi_v^r, where H = <v> and psi_v(v) is the
// primitive root e^{2 pi i / ord(v)}; equals ord(v) * <chi, v>.
long long r_value(const GroupSpec& g, const Tuple& chi, const Tuple& v);

// 1 iff r(chi,v) + r(chi',v) >= ord(v)
int epsilon(const GroupSpec& g, const Tuple& chi, const Tuple& chi2, const Tuple& v);

struct Subgroup {
    std::vector<Tuple> generators;
    std::vector<Tuple> elements;  // closure, sorted by index

    long long order() const { return static_cast<long long>(elements.size()); }
    bool contains(const GroupSpec& g, const Tuple& t) const;
};

Subgroup span(const GroupSpec& g, const std::vector<Tuple>& gens);

// {v in G : <chi, v> = 0 for all chi in chars}
Subgroup annihilator(const GroupSpec& g, const std::vector<Tuple>& chars);

// {chi in G^* : <chi, v> = 0 for all v in gamma}
std::vector<Tuple> perp(const GroupSpec& g, const Subgroup& gamma);

// G/Gamma in canonical form (invariant factors s1 | s2 | ... from the Smith
// normal form of the relation lattice), with the projection on elements and
// the embedding of (G/Gamma)^* into G^* as Gamma-perp.
struct QuotientMap {
    GroupSpec source;
    GroupSpec quotient;                        // possibly empty orders list (trivial group)
    std::vector<std::vector<long long>> U;     // unimodular row transform
    std::vector<long long> invariant_factors;  // full SNF diagonal, size = ngens(source)

    Tuple project(const Tuple& v) const;
    // chi_bar on G/Gamma pulled back to a character of G
    Tuple embed_character(const Tuple& chi_bar) const;
};

QuotientMap quotient(const GroupSpec& g, const Subgroup& gamma);

std::string tuple_str(const Tuple& t);

}  // namespace abelcover
