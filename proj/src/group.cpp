/*
 * Finite abelian groups and their characters.
 *
 * Inertia data of a cover is stored as a single group element v: under the
 * bijection v <-> (H, psi) with H = <v> and psi(v) = e^{2 pi i/ord v}, the
 * pair is recovered from v and all r-values reduce to the exact rational
 * pairing <chi, v>. Quotients are computed via the Smith normal form of the
 * relation lattice [diag(d_i) | lifts of the subgroup generators], which
 * yields the canonical invariant-factor presentation of G/Gamma together
 * with a projection matrix for elements and branch data.
 */

#include "abelcover/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace abelcover {

namespace {
constexpr long long kEnumerationLimit = 1 << 20;

long long positive_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}
}  // namespace

GroupSpec::GroupSpec(std::vector<long long> ds) : orders(std::move(ds)) {
    for (long long d : orders)
        if (d < 2)
            throw InputError("group order entries must be >= 2");
}

long long GroupSpec::size() const {
    long long n = 1;
    for (long long d : orders)
        n *= d;
    return n;
}

long long GroupSpec::exponent() const {
    long long e = 1;
    for (long long d : orders)
        e = std::lcm(e, d);
    return e;
}

Tuple GroupSpec::reduce(Tuple t) const {
    if (t.size() != orders.size())
        throw InputError("tuple length " + std::to_string(t.size()) + " for group of rank " +
                         std::to_string(orders.size()));
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = positive_mod(t[i], orders[i]);
    return t;
}

Tuple GroupSpec::add(const Tuple& a, const Tuple& b) const {
    Tuple r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return reduce(std::move(r));
}

Tuple GroupSpec::neg(const Tuple& a) const {
    Tuple r = a;
    for (auto& x : r)
        x = -x;
    return reduce(std::move(r));
}

Tuple GroupSpec::scale(long long k, const Tuple& a) const {
    Tuple r = a;
    for (auto& x : r)
        x *= k;
    return reduce(std::move(r));
}

bool GroupSpec::is_zero(const Tuple& a) const {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (positive_mod(a[i], orders[i]) != 0)
            return false;
    return true;
}

long long GroupSpec::index_of(const Tuple& t) const {
    Tuple r = reduce(t);
    long long idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        idx = idx * orders[i] + r[i];
    return idx;
}

Tuple GroupSpec::element(long long index) const {
    Tuple t(orders.size(), 0);
    for (std::size_t i = orders.size(); i-- > 0;) {
        t[i] = index % orders[i];
        index /= orders[i];
    }
    return t;
}

long long order_of(const GroupSpec& g, const Tuple& v) {
    Tuple r = g.reduce(v);
    long long m = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
        m = std::lcm(m, g.orders[i] / std::gcd(g.orders[i], r[i]));
    return m;
}

Rat pairing(const GroupSpec& g, const Tuple& chi, const Tuple& v) {
    Tuple c = g.reduce(chi), w = g.reduce(v);
    Rat total;
    for (std::size_t i = 0; i < c.size(); ++i)
        total += Rat(c[i] * w[i], g.orders[i]);
    return total.frac();
}

long long r_value(const GroupSpec& g, const Tuple& chi, const Tuple& v) {
    if (g.is_zero(v))
        throw InputError("r-value needs a nonzero inertia element");
    return (pairing(g, chi, v) * Rat(order_of(g, v))).as_integer();
}

int epsilon(const GroupSpec& g, const Tuple& chi, const Tuple& chi2, const Tuple& v) {
    return r_value(g, chi, v) + r_value(g, chi2, v) >= order_of(g, v) ? 1 : 0;
}

bool Subgroup::contains(const GroupSpec& g, const Tuple& t) const {
    Tuple r = g.reduce(t);
    return std::binary_search(elements.begin(), elements.end(), r,
                              [&g](const Tuple& a, const Tuple& b) {
                                  return g.index_of(a) < g.index_of(b);
                              });
}

Subgroup span(const GroupSpec& g, const std::vector<Tuple>& gens) {
    Subgroup h;
    h.generators = gens;
    std::set<long long> seen;
    std::vector<Tuple> frontier;
    seen.insert(g.index_of(g.zero()));
    frontier.push_back(g.zero());
    while (!frontier.empty()) {
        Tuple cur = frontier.back();
        frontier.pop_back();
        for (const auto& gen : gens) {
            Tuple next = g.add(cur, gen);
            if (seen.insert(g.index_of(next)).second)
                frontier.push_back(next);
        }
    }
    for (long long idx : seen)
        h.elements.push_back(g.element(idx));
    return h;
}

Subgroup annihilator(const GroupSpec& g, const std::vector<Tuple>& chars) {
    if (g.size() > kEnumerationLimit)
        throw InputError("group too large to enumerate");
    std::vector<Tuple> members;
    for (long long idx = 1; idx < g.size(); ++idx) {
        Tuple v = g.element(idx);
        bool ok = true;
        for (const auto& chi : chars)
            if (!pairing(g, chi, v).is_zero()) {
                ok = false;
                break;
            }
        if (ok)
            members.push_back(v);
    }
    // greedy minimal generating set, preferring high-order elements so
    // cyclic annihilators print as a single generator
    std::stable_sort(members.begin(), members.end(), [&g](const Tuple& a, const Tuple& b) {
        return order_of(g, a) > order_of(g, b);
    });
    std::vector<Tuple> gens;
    Subgroup cur = span(g, gens);
    for (const auto& v : members) {
        if (!cur.contains(g, v)) {
            gens.push_back(v);
            cur = span(g, gens);
        }
    }
    return cur;
}

std::vector<Tuple> perp(const GroupSpec& g, const Subgroup& gamma) {
    if (g.size() > kEnumerationLimit)
        throw InputError("group too large to enumerate");
    std::vector<Tuple> result;
    for (long long idx = 0; idx < g.size(); ++idx) {
        Tuple chi = g.element(idx);
        bool ok = true;
        for (const auto& v : gamma.elements)
            if (!pairing(g, chi, v).is_zero()) {
                ok = false;
                break;
            }
        if (ok)
            result.push_back(chi);
    }
    return result;
}

namespace {

// Smith normal form of an integer matrix: returns diag entries and the
// unimodular row transform U with U*M*V = S. Entries stay tiny here.
struct SnfResult {
    std::vector<long long> diag;
    std::vector<std::vector<long long>> U;
};

SnfResult smith_normal_form(std::vector<std::vector<long long>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::vector<long long>> u(rows, std::vector<long long>(rows, 0));
    for (std::size_t i = 0; i < rows; ++i)
        u[i][i] = 1;

    auto row_op = [&](std::size_t dst, std::size_t src, long long k) {
        for (std::size_t j = 0; j < cols; ++j)
            m[dst][j] += k * m[src][j];
        for (std::size_t j = 0; j < rows; ++j)
            u[dst][j] += k * u[src][j];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    };
    auto row_negate = [&](std::size_t a) {
        for (auto& x : m[a])
            x = -x;
        for (auto& x : u[a])
            x = -x;
    };
    auto col_op = [&](std::size_t dst, std::size_t src, long long k) {
        for (std::size_t i = 0; i < rows; ++i)
            m[i][dst] += k * m[i][src];
    };

    for (std::size_t t = 0; t < rows && t < cols; ++t) {
        for (;;) {
            // nonzero pivot of smallest magnitude in the remaining block
            std::size_t pi = t, pj = t;
            long long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    long long a = m[i][j] < 0 ? -m[i][j] : m[i][j];
                    if (a != 0 && (best == 0 || a < best)) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) {
                if (m[t][t] < 0)
                    row_negate(t);
                break;
            }
            row_swap(t, pi);
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(m[i][t], m[i][pj]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    row_op(i, t, -(m[i][t] / m[t][t]));
                    if (m[i][t] != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    col_op(j, t, -(m[t][j] / m[t][t]));
                    if (m[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;  // euclidean remainders left; re-pick a smaller pivot
            // pivot must divide the whole remaining block for the
            // divisibility chain; fold an offending row in and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        row_op(t, i, 1);
                        divides = false;
                        break;
                    }
            if (!divides)
                continue;
            if (m[t][t] < 0)
                row_negate(t);
            break;
        }
    }

    SnfResult r;
    r.U = std::move(u);
    for (std::size_t i = 0; i < rows; ++i)
        r.diag.push_back(i < cols ? m[i][i] : 0);
    return r;
}

}  // namespace

Tuple QuotientMap::project(const Tuple& v) const {
    if (v.size() != source.orders.size())
        throw InputError("element of wrong rank in quotient projection");
    Tuple w(source.orders.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            w[i] += U[i][j] * v[j];
    Tuple bar;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (invariant_factors[i] != 1)
            bar.push_back(positive_mod(w[i], invariant_factors[i]));
    return bar;
}

Tuple QuotientMap::embed_character(const Tuple& chi_bar) const {
    if (chi_bar.size() != quotient.orders.size())
        throw InputError("character of wrong rank in quotient embedding");
    // chi(e_j) = chi_bar(project(e_j)); solve for integer coordinates
    Tuple chi(source.orders.size(), 0);
    for (std::size_t j = 0; j < source.orders.size(); ++j) {
        Rat val;
        std::size_t bar_i = 0;
        for (std::size_t i = 0; i < source.orders.size(); ++i) {
            if (invariant_factors[i] == 1)
                continue;
            val += Rat(chi_bar[bar_i] * U[i][j], invariant_factors[i]);
            ++bar_i;
        }
        chi[j] = (val.frac() * Rat(source.orders[j])).as_integer();
    }
    return source.reduce(chi);
}

QuotientMap quotient(const GroupSpec& g, const Subgroup& gamma) {
    const std::size_t k = g.ngens();
    std::vector<std::vector<long long>> m(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i].assign(k + gamma.generators.size(), 0);
        m[i][i] = g.orders[i];
    }
    for (std::size_t c = 0; c < gamma.generators.size(); ++c) {
        Tuple gen = g.reduce(gamma.generators[c]);
        for (std::size_t i = 0; i < k; ++i)
            m[i][k + c] = gen[i];
    }
    SnfResult snf = smith_normal_form(std::move(m));

    QuotientMap qm;
    qm.source = g;
    qm.U = snf.U;
    qm.invariant_factors = snf.diag;
    std::vector<long long> q_orders;
    for (long long s : snf.diag) {
        if (s == 0)
            throw EngineError("quotient of finite group produced a free factor");
        if (s != 1)
            q_orders.push_back(s);
    }
    if (!q_orders.empty())
        qm.quotient = GroupSpec(q_orders);
    return qm;
}

std::string tuple_str(const Tuple& t) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    os << ")";
    return os.str();
}

}  // namespace abelcover
