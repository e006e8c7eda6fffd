/*
 * Canonical map analysis for an abelian cover f: X -> Y.
 *
 * H^0(K_X) splits into the pieces H^0(K_Y + L_chi); the subgroup Gamma
 * killing all contributing characters is computed, never copied from a
 * source, and the cover Z = X/Gamma -> Y is derived by pushing the branch
 * data through the quotient map (components with trivial image become
 * unbranched) and restricting the character table to Gamma-perp. The
 * degree of the canonical map is then settled by rules:
 *   (a) a single contributing character: phi_X is the |K_Y+L_chi|-map
 *       composed with f, so deg = |G| times the declared degree of that map;
 *   (b) simple cyclic quotient of prime degree with pg(Z) exceeding the
 *       sections of the adjoint class pulled back from Y: phi_Z cannot be
 *       composed with Z -> Y, hence is birational;
 *   (c) a declared degree for phi_Z (Horikawa double covers, canonically
 *       embedded quotients).
 * Anything else stays Undetermined; the trace records which rule fired.
 */

#include "abelcover/canmap.hpp"

#include <algorithm>
#include <sstream>

namespace abelcover {

CanonicalDecomposition decompose(const BuildingData& bd) {
    CanonicalDecomposition dec;
    for (long long i = 0; i < bd.group.size(); ++i) {
        Tuple chi = bd.group.element(i);
        DivisorClass bundle = bd.surface.canonical + bd.L_of(chi);
        long long sections =
            bd.group.is_zero(chi) ? bd.surface.pg : h0(bd.surface, bundle);
        dec.entries.push_back(DecompositionEntry{chi, bundle, sections});
        dec.pg_total += sections;
        if (!bd.group.is_zero(chi) && sections > 0)
            dec.contributing.push_back(chi);
    }
    return dec;
}

std::string case_hint_str(CaseHint c) {
    switch (c) {
        case CaseHint::CaseA: return "A";
        case CaseHint::CaseB: return "B";
        default: return "undetermined";
    }
}

namespace {

BuildingData quotient_building_data(const BuildingData& bd, const QuotientMap& qmap,
                                    std::vector<std::pair<std::string, Tuple>>& images,
                                    std::vector<std::string>& dropped) {
    BuildingData qbd;
    qbd.surface = bd.surface;
    qbd.group = qmap.quotient;
    qbd.config = bd.config;
    qbd.declared_connected = bd.declared_connected;
    for (const auto& b : bd.branch) {
        Tuple vbar = qmap.project(b.v);
        if (qmap.quotient.is_zero(vbar)) {
            dropped.push_back(b.label);
            continue;
        }
        BranchComponent qb = b;
        qb.v = vbar;
        qbd.branch.push_back(qb);
        images.emplace_back(b.label, vbar);
    }
    for (long long i = 1; i < qmap.quotient.size(); ++i) {
        Tuple chi_bar = qmap.quotient.element(i);
        qbd.L[chi_bar] = bd.L_of(qmap.embed_character(chi_bar));
    }
    return qbd;
}

}  // namespace

FactorizationReport factorization(const BuildingData& bd, const DeclaredFacts& facts) {
    CanonicalDecomposition dec = decompose(bd);
    FactorizationReport rep;
    rep.gamma = annihilator(bd.group, dec.contributing);
    rep.degree_factor = rep.gamma.order();
    rep.qmap = quotient(bd.group, rep.gamma);
    rep.quotient_bd = quotient_building_data(bd, rep.qmap, rep.branch_images, rep.dropped);

    // guard: contributing characters must vanish on Gamma by construction
    for (const auto& chi : dec.contributing)
        for (const auto& v : rep.gamma.elements)
            if (!pairing(bd.group, chi, v).is_zero())
                throw EngineError("contributing character " + tuple_str(chi) +
                                  " does not annihilate Gamma");

    CanonicalDecomposition qdec = decompose(rep.quotient_bd);
    rep.pg_Z = qdec.pg_total;
    if (rep.pg_Z != dec.pg_total)
        throw EngineError("pg(Z) = " + std::to_string(rep.pg_Z) + " differs from pg(X) = " +
                          std::to_string(dec.pg_total));

    std::ostringstream trace;

    if (dec.contributing.size() == 1 && bd.surface.pg == 0) {
        // |K_X| is pulled back from Y: phi_X = (|K_Y+L_chi|-map) o f
        const Tuple& chi = dec.contributing.front();
        DivisorClass cls = bd.surface.canonical + bd.L_of(chi);
        trace << "single contributing character " << tuple_str(chi)
              << ": canonical system pulled back from |" << cls.str() << "|";
        if (facts.system_map && facts.system_map->cls == cls) {
            rep.degree = bd.group.size() * facts.system_map->degree;
            rep.hint =
                facts.system_map->image_pg == 0 ? CaseHint::CaseA : CaseHint::Undetermined;
            trace << "; declared |" << cls.str() << "|-map degree "
                  << facts.system_map->degree << " => deg phi_X = |G| * "
                  << facts.system_map->degree << " = " << *rep.degree;
            if (!facts.system_map->note.empty())
                trace << " (" << facts.system_map->note << ")";
        } else {
            trace << "; no declared degree for that system";
        }
        rep.trace.push_back(trace.str());
        return rep;
    }

    // rule (b): simple cyclic quotient of prime degree
    Tuple v0;
    if (rep.qmap.quotient.ngens() == 1 && is_simple_cyclic(rep.quotient_bd, &v0)) {
        long long dq = rep.qmap.quotient.size();
        bool prime = dq >= 2;
        for (long long p = 2; p * p <= dq && prime; ++p)
            if (dq % p == 0)
                prime = false;
        if (prime) {
            DivisorClass adj = simple_cyclic_adjunction(rep.quotient_bd);
            long long pulled = h0(bd.surface, adj);
            if (rep.pg_Z > pulled) {
                rep.degree = rep.degree_factor;
                rep.hint = CaseHint::CaseB;
                trace << "quotient is a simple Z_" << dq << "-cover with K_Z pulled back from |"
                      << adj.str() << "|; pg_Z = " << rep.pg_Z << " > " << pulled << " = h0("
                      << adj.str() << ") => phi_Z birational => deg phi_X = |Gamma| = "
                      << *rep.degree;
                rep.trace.push_back(trace.str());
                return rep;
            }
            trace << "simple cyclic quotient but pg_Z = " << rep.pg_Z
                  << " <= h0(pullback class); rule inconclusive. ";
        }
    }

    // rule (c): declared canonical degree of the quotient surface
    if (facts.quotient_phi) {
        rep.degree = rep.degree_factor * facts.quotient_phi->degree;
        if (facts.quotient_phi->degree == 1)
            rep.hint = CaseHint::CaseB;
        else if (facts.quotient_phi->image_pg == 0)
            rep.hint = CaseHint::CaseA;
        trace << "declared: deg phi_Z = " << facts.quotient_phi->degree;
        if (!facts.quotient_phi->note.empty())
            trace << " (" << facts.quotient_phi->note << ")";
        trace << " => deg phi_X = |Gamma| * " << facts.quotient_phi->degree << " = "
              << *rep.degree;
        rep.trace.push_back(trace.str());
        return rep;
    }

    if (facts.canonical_degree) {
        rep.degree = *facts.canonical_degree;
        rep.hint = facts.canonical_image_pg == 0 ? CaseHint::CaseA : CaseHint::Undetermined;
        trace << "declared: deg phi_X = " << *facts.canonical_degree;
        if (!facts.canonical_degree_note.empty())
            trace << " (" << facts.canonical_degree_note << ")";
        rep.trace.push_back(trace.str());
        return rep;
    }

    trace << "no degree rule applies";
    rep.trace.push_back(trace.str());
    return rep;
}

BaseLocusReport base_locus(const BuildingData& bd, const CanonicalDecomposition& dec,
                           const DeclaredFacts& facts) {
    BaseLocusReport rep;
    if (dec.contributing.empty() && bd.surface.pg == 0)
        throw InputError("base locus undefined: no contributing characters");

    std::vector<Tuple> chars = dec.contributing;
    if (bd.surface.pg > 0)
        chars.insert(chars.begin(), bd.group.zero());  // chi = 1 piece, r = 0 throughout

    for (const auto& chi : chars) {
        auto& row = rep.per_char[chi];
        for (const auto& b : bd.branch) {
            long long m = order_of(bd.group, b.v);
            long long r = bd.group.is_zero(chi) ? 0 : r_value(bd.group, chi, b.v);
            row[b.label] = m - 1 - r;
        }
    }

    for (const auto& b : bd.branch) {
        long long lo = -1;
        for (const auto& chi : chars) {
            long long v = rep.per_char.at(chi).at(b.label);
            lo = lo < 0 ? v : std::min(lo, v);
        }
        if (lo > 0)
            rep.fixed_part[b.label] = lo;
    }

    if (chars.size() == 2) {
        // two moving groupings: base points away from the fixed divisor are
        // the crossings of the residual tails, counted upstairs
        bool free_systems = true;
        for (const auto& chi : chars) {
            DivisorClass cls = bd.surface.canonical + bd.L_of(chi);
            bool free_here = bd.surface.computable() ? is_base_point_free(bd.surface, cls)
                                                     : false;
            for (const auto& declared : facts.base_point_free)
                if (declared == cls.str())
                    free_here = true;
            if (!free_here)
                free_systems = false;
        }
        if (free_systems) {
            Rat count;
            for (const auto& bi : bd.branch) {
                long long fi = rep.fixed_part.count(bi.label) ? rep.fixed_part[bi.label] : 0;
                long long ti = rep.per_char.at(chars[0]).at(bi.label) - fi;
                if (ti == 0)
                    continue;
                for (const auto& bj : bd.branch) {
                    long long fj = rep.fixed_part.count(bj.label) ? rep.fixed_part[bj.label] : 0;
                    long long tj = rep.per_char.at(chars[1]).at(bj.label) - fj;
                    if (tj == 0)
                        continue;
                    long long mi = order_of(bd.group, bi.v);
                    long long mj = order_of(bd.group, bj.v);
                    // R_i . R_j = |G| D_i.D_j / (m_i m_j) upstairs
                    count += Rat(ti) * Rat(tj) * Rat(bd.group.size(), mi * mj) *
                             Rat(intersect(bd.surface, bi.cls, bj.cls));
                }
            }
            rep.isolated_point_count = count.as_integer();
        } else {
            rep.notes.push_back(
                "isolated base points not computed: a moving system is not certified free");
        }
    } else {
        rep.notes.push_back("isolated base points computed only for two moving groupings");
    }
    return rep;
}

}  // namespace abelcover
