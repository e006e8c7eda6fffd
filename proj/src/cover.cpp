/*
 * Building data of abelian covers.
 *
 * A G-cover f: X -> Y is stored as branch components (inertia element v,
 * divisor class) together with the complete table of character line
 * bundles L_chi. The table is produced from the reduced relations for a
 * generating set of characters and extended by the floor formula; validity
 * is certified by checking every fundamental relation
 *     L_chi + L_chi' = L_chichi' + sum_v eps_{chi,chi'}(v) D_v
 * in the lattice. Invariants come from
 *     K_X^2 = |G| (K_Y + sum (1-1/m_v) D_v)^2
 *     h^i(O_X) = h^i(O_Y) + sum_{chi != 1} h^i(-L_chi)
 * with h^2(-L_chi) evaluated as h^0(K_Y + L_chi) by Serre duality.
 */

#include "abelcover/cover.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abelcover {

const DivisorClass& BuildingData::L_of(const Tuple& chi) const {
    static thread_local DivisorClass zero;
    if (group.is_zero(chi)) {
        zero = DivisorClass::zero(surface.rank);
        return zero;
    }
    auto it = L.find(group.reduce(chi));
    if (it == L.end())
        throw EngineError("incomplete character table: missing L for " + tuple_str(chi));
    return it->second;
}

DivisorClass BuildingData::branch_total() const {
    DivisorClass d = DivisorClass::zero(surface.rank);
    for (const auto& b : branch)
        d += b.cls;
    return d;
}

std::vector<Tuple> canonical_basis_chars(const GroupSpec& group) {
    std::vector<Tuple> basis;
    for (std::size_t i = 0; i < group.ngens(); ++i) {
        Tuple chi = group.zero();
        chi[i] = 1;
        basis.push_back(chi);
    }
    return basis;
}

namespace {

void validate_branch(const BaseSurface& surface, const GroupSpec& group,
                     const std::vector<BranchComponent>& branch) {
    std::set<std::string> labels;
    for (const auto& b : branch) {
        if (group.is_zero(b.v))
            throw InputError("branch component '" + b.label + "' with zero inertia element");
        if (static_cast<int>(b.cls.rank()) != surface.rank)
            throw DimensionMismatch("branch class rank mismatch for '" + b.label + "'");
        if (!labels.insert(b.label).second)
            throw InputError("duplicate branch label '" + b.label + "'");
    }
}

// write chi as sum a_i chi_i over the given generating characters, 0 <= a_i < d_i
std::vector<long long> decompose_in_basis(const GroupSpec& group,
                                          const std::vector<Tuple>& basis_chars,
                                          const Tuple& chi) {
    // basis characters are required to split G^* as a direct sum, so a
    // mixed-radix search over the coefficients terminates; for the canonical
    // dual basis the coefficients are just the coordinates.
    bool canonical = basis_chars.size() == group.ngens();
    if (canonical) {
        for (std::size_t i = 0; i < basis_chars.size() && canonical; ++i) {
            Tuple e = group.zero();
            e[i] = 1;
            canonical = basis_chars[i] == e;
        }
    }
    if (canonical)
        return group.reduce(chi);

    std::vector<long long> orders;
    long long total = 1;
    for (const auto& b : basis_chars) {
        orders.push_back(order_of(group, b));
        total *= orders.back();
    }
    if (total != group.size())
        throw InputError("basis characters do not split the character group");
    std::vector<long long> a(basis_chars.size(), 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        Tuple sum = group.zero();
        for (std::size_t i = 0; i < basis_chars.size(); ++i) {
            a[i] = rem % orders[i];
            rem /= orders[i];
            sum = group.add(sum, group.scale(a[i], basis_chars[i]));
        }
        if (sum == group.reduce(chi))
            return a;
    }
    throw InputError("character " + tuple_str(chi) + " not generated by the basis");
}

}  // namespace

std::map<Tuple, DivisorClass> solve_reduced(const BaseSurface& surface, const GroupSpec& group,
                                            const std::vector<BranchComponent>& branch,
                                            const std::vector<Tuple>& basis_chars) {
    validate_branch(surface, group, branch);
    std::map<Tuple, DivisorClass> out;
    for (const auto& chi : basis_chars) {
        long long d = order_of(group, chi);
        DivisorClass r = DivisorClass::zero(surface.rank);
        for (const auto& b : branch) {
            // d * r_chi(v) / m_v = d * <chi, v>, an integer since chi^d = 1
            long long coeff = (pairing(group, chi, b.v) * Rat(d)).as_integer();
            r += b.cls * coeff;
        }
        DivisorClass l = DivisorClass::zero(surface.rank);
        for (std::size_t i = 0; i < l.c.size(); ++i) {
            if (r.c[i] % d != 0)
                throw NonDivisible("reduced relation for " + tuple_str(chi) + ": class " +
                                   r.str() + " not divisible by " + std::to_string(d));
            l.c[i] = r.c[i] / d;
        }
        out[group.reduce(chi)] = l;
    }
    return out;
}

std::map<Tuple, DivisorClass> all_L_chi(const BaseSurface& surface, const GroupSpec& group,
                                        const std::vector<BranchComponent>& branch,
                                        const std::vector<Tuple>& basis_chars,
                                        const std::map<Tuple, DivisorClass>& reduced) {
    // r_i(v) per basis character and branch component, computed once
    std::vector<std::vector<long long>> r_basis(basis_chars.size(),
                                                std::vector<long long>(branch.size()));
    std::vector<long long> orders(branch.size());
    for (std::size_t b = 0; b < branch.size(); ++b) {
        orders[b] = order_of(group, branch[b].v);
        for (std::size_t i = 0; i < basis_chars.size(); ++i)
            r_basis[i][b] = r_value(group, basis_chars[i], branch[b].v);
    }

    std::map<Tuple, DivisorClass> table;
    for (long long idx = 1; idx < group.size(); ++idx) {
        Tuple chi = group.element(idx);
        std::vector<long long> alpha = decompose_in_basis(group, basis_chars, chi);
        DivisorClass l = DivisorClass::zero(surface.rank);
        for (std::size_t i = 0; i < basis_chars.size(); ++i)
            l += reduced.at(group.reduce(basis_chars[i])) * alpha[i];
        for (std::size_t b = 0; b < branch.size(); ++b) {
            long long weighted = 0;  // sum_i a_i r_i(v), a plain integer sum
            for (std::size_t i = 0; i < basis_chars.size(); ++i)
                weighted += alpha[i] * r_basis[i][b];
            l -= branch[b].cls * (weighted / orders[b]);
        }
        table[chi] = l;
    }
    return table;
}

BuildingData make_building_data(BaseSurface surface, GroupSpec group,
                                std::vector<BranchComponent> branch,
                                ConfigurationAssumption cfg) {
    auto basis = canonical_basis_chars(group);
    auto reduced = solve_reduced(surface, group, branch, basis);
    BuildingData bd;
    bd.L = all_L_chi(surface, group, branch, basis, reduced);
    bd.surface = std::move(surface);
    bd.group = std::move(group);
    bd.branch = std::move(branch);
    bd.config = std::move(cfg);
    return bd;
}

std::string RelationViolation::str() const {
    return "relation (" + tuple_str(chi) + "," + tuple_str(chi2) + ") off by " +
           discrepancy.str();
}

std::vector<RelationViolation> verify_fundamental(const BuildingData& bd) {
    std::vector<RelationViolation> violations;
    const long long n = bd.group.size();
    const std::size_t nb = bd.branch.size();

    // precomputed integer tables keep the |G^*|^2 loop free of rationals
    std::vector<long long> orders(nb);
    for (std::size_t b = 0; b < nb; ++b)
        orders[b] = order_of(bd.group, bd.branch[b].v);
    std::vector<std::vector<long long>> r(n, std::vector<long long>(nb, 0));
    std::vector<const DivisorClass*> bundles(n);
    for (long long i = 0; i < n; ++i) {
        Tuple chi = bd.group.element(i);
        bundles[i] = &bd.L_of(chi);
        if (i > 0)
            for (std::size_t b = 0; b < nb; ++b)
                r[i][b] = r_value(bd.group, chi, bd.branch[b].v);
    }

    for (long long i = 0; i < n; ++i) {
        Tuple chi = bd.group.element(i);
        for (long long j = 0; j < n; ++j) {
            Tuple chi2 = bd.group.element(j);
            long long k = bd.group.index_of(bd.group.add(chi, chi2));
            DivisorClass lhs = *bundles[i] + *bundles[j];
            DivisorClass rhs = *bundles[k];
            for (std::size_t b = 0; b < nb; ++b)
                if (r[i][b] + r[j][b] >= orders[b])
                    rhs += bd.branch[b].cls;
            if (lhs != rhs)
                violations.push_back(RelationViolation{chi, chi2, lhs - rhs});
        }
    }
    return violations;
}

std::vector<Tuple> check_d_power(const BuildingData& bd) {
    std::vector<Tuple> failing;
    for (long long i = 1; i < bd.group.size(); ++i) {
        Tuple chi = bd.group.element(i);
        long long d = order_of(bd.group, chi);
        DivisorClass rhs = DivisorClass::zero(bd.surface.rank);
        for (const auto& b : bd.branch)
            rhs += b.cls * (pairing(bd.group, chi, b.v) * Rat(d)).as_integer();
        if (bd.L_of(chi) * d != rhs)
            failing.push_back(chi);
    }
    return failing;
}

bool totally_ramified(const BuildingData& bd) {
    std::vector<Tuple> gens;
    for (const auto& b : bd.branch)
        gens.push_back(b.v);
    return span(bd.group, gens).order() == bd.group.size();
}

std::string tristate_str(TriState t) {
    switch (t) {
        case TriState::Yes: return "yes";
        case TriState::No: return "no";
        default: return "undetermined";
    }
}

namespace {

// condition (3) at a point: the sum of the inertia subgroups must embed
bool inertia_inject(const GroupSpec& g, const std::vector<Tuple>& vs) {
    std::vector<Tuple> gens;
    long long product = 1;
    for (const auto& v : vs) {
        gens.push_back(v);
        product *= order_of(g, v);
    }
    return span(g, gens).order() == product;
}

}  // namespace

SmoothnessReport smoothness_check(const BuildingData& bd) {
    SmoothnessReport rep;
    bool declared_ok = true;
    for (const auto& b : bd.branch)
        if (!b.declared_smooth)
            declared_ok = false;

    auto component = [&](const std::string& label) -> const BranchComponent& {
        for (const auto& b : bd.branch)
            if (b.label == label)
                return b;
        throw InputError("explicit point references unknown label '" + label + "'");
    };

    if (bd.config.mode == ConfigMode::ExplicitPoints) {
        for (const auto& pt : bd.config.points) {
            std::vector<Tuple> vs;
            for (const auto& lbl : pt.incident)
                vs.push_back(component(lbl).v);
            if (vs.size() > 2)
                rep.failing.push_back(FailingPoint{
                    "point " + pt.id + ": more than two components, not normal crossings",
                    pt.incident, 2});
            if (!inertia_inject(bd.group, vs))
                rep.failing.push_back(FailingPoint{
                    "point " + pt.id + ": inertia subgroups do not embed in G", pt.incident, 3});
        }
    } else {
        // general position / snc: points are the pairwise intersections,
        // existing exactly when the classes meet numerically
        for (std::size_t i = 0; i < bd.branch.size(); ++i)
            for (std::size_t j = i + 1; j < bd.branch.size(); ++j) {
                long long meets = intersect(bd.surface, bd.branch[i].cls, bd.branch[j].cls);
                if (meets <= 0)
                    continue;
                if (!inertia_inject(bd.group, {bd.branch[i].v, bd.branch[j].v}))
                    rep.failing.push_back(FailingPoint{
                        "components '" + bd.branch[i].label + "' and '" + bd.branch[j].label +
                            "' meet (" + std::to_string(meets) +
                            " points) but their inertia subgroups do not embed",
                        {bd.branch[i].label, bd.branch[j].label},
                        3});
            }
    }

    if (!rep.failing.empty())
        rep.smooth = TriState::No;
    else if (declared_ok)
        rep.smooth = TriState::Yes;
    else {
        rep.smooth = TriState::Undetermined;
        rep.notes.push_back("some branch members not declared smooth");
    }
    return rep;
}

CoverInvariants invariants(const BuildingData& bd, bool require_integral_k2) {
    CoverInvariants inv;

    RationalClass adj(bd.surface.canonical);
    for (const auto& b : bd.branch) {
        long long m = order_of(bd.group, b.v);
        adj += RationalClass(b.cls) * Rat(m - 1, m);
    }
    inv.adjunction_class = adj;
    inv.K2_rational = intersect(bd.surface, adj, adj) * Rat(bd.group.size());
    if (inv.K2_rational.is_integer())
        inv.K2 = inv.K2_rational.as_integer();
    else if (require_integral_k2)
        throw NonIntegralK2("K^2 = " + inv.K2_rational.str() + " is not an integer");

    inv.q = bd.surface.q;
    inv.pg = bd.surface.pg;
    for (long long i = 1; i < bd.group.size(); ++i) {
        Tuple chi = bd.group.element(i);
        const DivisorClass& l = bd.L_of(chi);
        inv.q += cohomology(bd.surface, -l).h1;
        inv.pg += h0(bd.surface, bd.surface.canonical + l);
    }
    inv.chi = 1 - inv.q + inv.pg;

    if (bd.surface.computable()) {
        long long denom = adj.common_denominator();
        DivisorClass scaled;
        for (const auto& x : adj.c)
            scaled.c.push_back((x * Rat(denom)).as_integer());
        if (is_nef(bd.surface, scaled) && inv.K2_rational > Rat(0))
            inv.minimal_general_type = TriState::Yes;
        else if (inv.K2_rational <= Rat(0))
            inv.minimal_general_type = TriState::No;
    }
    return inv;
}

bool is_simple_cyclic(const BuildingData& bd, Tuple* v0) {
    if (bd.branch.empty())
        return false;
    const Tuple first = bd.group.reduce(bd.branch.front().v);
    for (const auto& b : bd.branch)
        if (bd.group.reduce(b.v) != first)
            return false;
    if (order_of(bd.group, first) != bd.group.size())
        return false;
    if (v0)
        *v0 = first;
    return true;
}

DivisorClass simple_cyclic_adjunction(const BuildingData& bd) {
    Tuple v0;
    if (!is_simple_cyclic(bd, &v0))
        throw InputError("cover is not simple cyclic");
    const long long d = bd.group.size();
    // the character with r(chi, v0) = 1 turns the relation into dL = D
    for (long long i = 1; i < d; ++i) {
        Tuple chi = bd.group.element(i);
        if (r_value(bd.group, chi, v0) == 1)
            return bd.surface.canonical + bd.L_of(chi) * (d - 1);
    }
    throw EngineError("no character with r-value 1 against the branch generator");
}

}  // namespace abelcover
