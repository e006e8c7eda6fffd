/*
 * Entry runner: executes the module pipeline appropriate to a catalog
 * entry, diffs every computed value against the entry's expect block and
 * assembles both the human-readable and the machine-readable report.
 * Exit status: 0 clean, 1 any delta or consistency violation, 3 a
 * cohomology group could not be resolved.
 */

#include "abelcover/runner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace abelcover {

using nlohmann::json;

namespace {

std::string ll_str(long long v) { return std::to_string(v); }

void check_value(RunReport& rep, const std::string& field, long long computed,
                 const std::optional<TaggedValue>& expected) {
    Delta d;
    d.field = field;
    d.computed = ll_str(computed);
    if (expected) {
        d.expected = ll_str(expected->value);
        d.tag = expected->tag;
        d.ok = computed == expected->value;
    }
    rep.deltas.push_back(d);
}

void add_violation(RunReport& rep, const std::string& msg) { rep.violations.push_back(msg); }

json tuple_json(const Tuple& t) { return json(t); }

// -------------------------------------------------------------- abelian cover

void run_verify(RunReport& rep, const CatalogEntry& entry) {
    const BuildingData& bd = *entry.bd;
    json jmachine;

    auto violations = verify_fundamental(bd);
    for (const auto& v : violations)
        add_violation(rep, "fundamental " + v.str());
    auto dpower = check_d_power(bd);
    for (const auto& chi : dpower)
        add_violation(rep, "d-power relation fails for " + tuple_str(chi));

    // declared reduced data must agree with the solved relations
    if (entry.declared_L_basis) {
        for (const auto& [chi, cls] : *entry.declared_L_basis)
            if (bd.L_of(chi) != cls)
                add_violation(rep, "declared L for " + tuple_str(chi) + " is " + cls.str() +
                                       " but the reduced relations give " +
                                       bd.L_of(chi).str());
    }

    // connectedness surrogate: no trivial character bundle
    for (long long i = 1; i < bd.group.size(); ++i) {
        Tuple chi = bd.group.element(i);
        if (bd.L_of(chi).is_zero()) {
            if (bd.surface.computable())
                add_violation(rep, "L_chi = 0 for " + tuple_str(chi) + ": cover disconnected");
            else if (!bd.declared_connected)
                add_violation(rep, "L_chi = 0 for " + tuple_str(chi) +
                                       " and no connectedness declaration");
        }
    }

    bool ramified = totally_ramified(bd);
    if (!ramified && bd.surface.computable())
        add_violation(rep,
                      "inertia elements do not generate G: the cover factors through an "
                      "etale cover of a simply connected surface");

    SmoothnessReport smooth = smoothness_check(bd);
    for (const auto& f : smooth.failing)
        rep.lines.push_back("  smoothness condition (" + std::to_string(f.condition) +
                            "): " + f.description);

    Rat k2;
    bool k2_integral = true;
    try {
        k2 = invariants(bd, true).K2_rational;
    } catch (const NonIntegralK2& err) {
        k2_integral = false;
        add_violation(rep, err.what());
    }

    std::ostringstream line;
    line << "verify: fundamental relations " << (violations.empty() ? "OK" : "VIOLATED")
         << " (" << bd.group.size() * bd.group.size() << " pairs), d-power "
         << (dpower.empty() ? "OK" : "VIOLATED") << ", totally ramified "
         << (ramified ? "yes" : "no") << ", smooth " << tristate_str(smooth.smooth)
         << ", K2 integral " << (k2_integral ? "yes" : "no");
    rep.lines.push_back(line.str());

    jmachine["fundamental_violations"] = violations.size();
    jmachine["d_power_violations"] = dpower.size();
    jmachine["totally_ramified"] = ramified;
    jmachine["smooth"] = tristate_str(smooth.smooth);
    rep.machine["verify"] = jmachine;
}

void run_invariants(RunReport& rep, const CatalogEntry& entry, CoverInvariants& inv_out) {
    const BuildingData& bd = *entry.bd;
    CoverInvariants inv = invariants(bd, false);
    inv_out = inv;

    check_value(rep, "K2", inv.K2_rational.is_integer() ? inv.K2 : -1, entry.expect.K2);
    check_value(rep, "pg", inv.pg, entry.expect.pg);
    check_value(rep, "q", inv.q, entry.expect.q);
    check_value(rep, "chi", inv.chi, entry.expect.chi);

    // Euler characteristic double computation: the cohomology route must
    // agree with Riemann-Roch term by term
    long long chi_rr = bd.surface.chi_structure();
    for (long long i = 1; i < bd.group.size(); ++i)
        chi_rr += chi_riemann_roch(bd.surface, -bd.L_of(bd.group.element(i)));
    if (chi_rr != inv.chi)
        add_violation(rep, "chi mismatch: cohomology gives " + ll_str(inv.chi) +
                               ", Riemann-Roch gives " + ll_str(chi_rr));

    std::ostringstream line;
    line << "invariants: K2 = " << inv.K2_rational.str() << ", pg = " << inv.pg
         << ", q = " << inv.q << ", chi = " << inv.chi
         << ", adjunction class = " << inv.adjunction_class.str() << ", minimal general type "
         << tristate_str(inv.minimal_general_type);
    rep.lines.push_back(line.str());

    json jm;
    jm["K2"] = inv.K2_rational.is_integer() ? json(inv.K2)
                                            : json{inv.K2_rational.num, inv.K2_rational.den};
    jm["pg"] = inv.pg;
    jm["q"] = inv.q;
    jm["chi"] = inv.chi;
    jm["minimal_general_type"] = tristate_str(inv.minimal_general_type);
    rep.machine["invariants"] = jm;
}

void run_canonical(RunReport& rep, const CatalogEntry& entry) {
    const BuildingData& bd = *entry.bd;
    CanonicalDecomposition dec = decompose(bd);
    FactorizationReport fac = factorization(bd, entry.facts);
    BaseLocusReport locus = base_locus(bd, dec, entry.facts);

    check_value(rep, "gamma_order", fac.gamma.order(), entry.expect.gamma_order);
    if (entry.expect.gamma_gens) {
        Subgroup expected = span(bd.group, *entry.expect.gamma_gens);
        Delta d;
        d.field = "gamma";
        std::ostringstream comp;
        for (const auto& g : fac.gamma.generators)
            comp << tuple_str(g);
        d.computed = comp.str().empty() ? "trivial" : comp.str();
        std::ostringstream exp;
        for (const auto& g : *entry.expect.gamma_gens)
            exp << tuple_str(g);
        d.expected = "<" + exp.str() + ">";
        d.ok = expected.elements == fac.gamma.elements;
        rep.deltas.push_back(d);
    }
    if (entry.expect.quotient_orders) {
        Delta d;
        d.field = "quotient_orders";
        d.computed = tuple_str(fac.qmap.quotient.orders);
        d.expected = tuple_str(*entry.expect.quotient_orders);
        d.ok = fac.qmap.quotient.orders == *entry.expect.quotient_orders;
        rep.deltas.push_back(d);
    }
    if (entry.expect.quotient_groups) {
        // compare the regrouping as a partition of labels, ignoring which
        // coset representative names each group
        std::map<Tuple, std::set<std::string>> computed;
        for (const auto& [label, vbar] : fac.branch_images)
            computed[vbar].insert(label);
        std::set<std::set<std::string>> computed_sets;
        for (const auto& [vbar, labels] : computed)
            computed_sets.insert(labels);
        std::set<std::set<std::string>> expected_sets;
        for (const auto& grp : *entry.expect.quotient_groups)
            expected_sets.insert(std::set<std::string>(grp.begin(), grp.end()));
        Delta d;
        d.field = "quotient_groups";
        auto render = [](const std::set<std::set<std::string>>& sets) {
            std::ostringstream os;
            for (const auto& s : sets) {
                os << "{";
                bool first = true;
                for (const auto& lbl : s) {
                    os << (first ? "" : ",") << lbl;
                    first = false;
                }
                os << "}";
            }
            return os.str();
        };
        d.computed = render(computed_sets);
        d.expected = render(expected_sets);
        d.ok = computed_sets == expected_sets;
        rep.deltas.push_back(d);
    }
    if (entry.expect.quotient_dropped) {
        std::set<std::string> computed(fac.dropped.begin(), fac.dropped.end());
        std::set<std::string> expected(entry.expect.quotient_dropped->begin(),
                                       entry.expect.quotient_dropped->end());
        Delta d;
        d.field = "quotient_dropped";
        d.computed = ll_str(computed.size()) + " labels";
        d.expected = ll_str(expected.size()) + " labels";
        d.ok = computed == expected;
        rep.deltas.push_back(d);
    }
    check_value(rep, "pg_Z", fac.pg_Z, entry.expect.pg_Z);
    if (entry.expect.degree) {
        Delta d;
        d.field = "degree";
        d.computed = fac.degree ? ll_str(*fac.degree) : "undetermined";
        d.expected = ll_str(entry.expect.degree->value);
        d.tag = entry.expect.degree->tag;
        d.ok = fac.degree && *fac.degree == entry.expect.degree->value;
        rep.deltas.push_back(d);
    }
    if (entry.expect.case_label) {
        Delta d;
        d.field = "case";
        d.computed = case_hint_str(fac.hint);
        d.expected = std::string(1, *entry.expect.case_label);
        d.ok = d.computed == d.expected;
        rep.deltas.push_back(d);
    }
    if (entry.expect.fixed_part) {
        Delta d;
        d.field = "fixed_part";
        auto render = [](const std::map<std::string, long long>& m) {
            std::ostringstream os;
            os << "{";
            bool first = true;
            for (const auto& [k, v] : m) {
                os << (first ? "" : ", ") << k << ":" << v;
                first = false;
            }
            os << "}";
            return os.str();
        };
        std::map<std::string, long long> expected_nonzero;
        for (const auto& [k, v] : *entry.expect.fixed_part)
            if (v != 0)
                expected_nonzero[k] = v;
        d.computed = render(locus.fixed_part);
        d.expected = render(expected_nonzero);
        d.ok = locus.fixed_part == expected_nonzero;
        rep.deltas.push_back(d);
    }
    if (entry.expect.isolated_points) {
        Delta d;
        d.field = "isolated_points";
        d.computed = locus.isolated_point_count ? ll_str(*locus.isolated_point_count) : "n/a";
        d.expected = ll_str(entry.expect.isolated_points->value);
        d.tag = entry.expect.isolated_points->tag;
        d.ok = locus.isolated_point_count &&
               *locus.isolated_point_count == entry.expect.isolated_points->value;
        rep.deltas.push_back(d);
    }

    // the derived quotient must itself be a valid cover
    if (fac.qmap.quotient.size() > 1) {
        auto qviol = verify_fundamental(fac.quotient_bd);
        if (!qviol.empty())
            add_violation(rep, "quotient building data violates " +
                                   std::to_string(qviol.size()) + " fundamental relations");
    }

    std::ostringstream line;
    line << "canonical: contributing characters {";
    for (std::size_t i = 0; i < dec.contributing.size(); ++i)
        line << (i ? ", " : "") << tuple_str(dec.contributing[i]);
    line << "}, |Gamma| = " << fac.gamma.order() << ", pg_Z = " << fac.pg_Z << ", degree ";
    line << (fac.degree ? ll_str(*fac.degree) : "undetermined") << ", case "
         << case_hint_str(fac.hint);
    rep.lines.push_back(line.str());
    for (const auto& t : fac.trace)
        rep.lines.push_back("  trace: " + t);
    {
        std::ostringstream fp;
        fp << "  fixed part: ";
        if (locus.fixed_part.empty())
            fp << "empty";
        for (const auto& [label, mult] : locus.fixed_part)
            fp << label << ":" << mult << " ";
        if (locus.isolated_point_count)
            fp << "; isolated base points: " << *locus.isolated_point_count;
        rep.lines.push_back(fp.str());
    }

    json jm;
    {
        json gens = json::array();
        for (const auto& g : fac.gamma.generators)
            gens.push_back(tuple_json(g));
        jm["gamma_generators"] = gens;
        jm["gamma_order"] = fac.gamma.order();
        jm["quotient_orders"] = fac.qmap.quotient.orders;
        json jgroups = json::array();
        {
            std::map<Tuple, std::vector<std::string>> by_image;
            for (const auto& [label, vbar] : fac.branch_images)
                by_image[vbar].push_back(label);
            for (const auto& [vbar, labels] : by_image)
                jgroups.push_back(labels);
        }
        jm["quotient_groups"] = jgroups;
        jm["quotient_dropped"] = fac.dropped;
        jm["pg_Z"] = fac.pg_Z;
        if (fac.degree)
            jm["degree"] = *fac.degree;
        jm["case"] = case_hint_str(fac.hint);
        jm["trace"] = fac.trace;
        json contributing = json::array();
        for (const auto& chi : dec.contributing)
            contributing.push_back(tuple_json(chi));
        jm["contributing"] = contributing;
        json fp = json::object();
        for (const auto& [label, mult] : locus.fixed_part)
            fp[label] = mult;
        jm["fixed_part"] = fp;
        json per_char = json::object();
        for (const auto& [chi, row] : locus.per_char) {
            json jrow = json::object();
            for (const auto& [label, mult] : row)
                jrow[label] = mult;
            per_char[tuple_str(chi)] = jrow;
        }
        jm["base_multiplicities"] = per_char;
        if (locus.isolated_point_count)
            jm["isolated_points"] = *locus.isolated_point_count;
    }
    rep.machine["canonical"] = jm;
}

void run_bounds_cover(RunReport& rep, const CatalogEntry& entry, const CoverInvariants& inv) {
    auto rec = record_from_cover(entry, inv);
    if (!rec)
        return;
    auto verdicts = check(*rec);
    json jv = json::array();
    bool all_ok = true;
    for (const auto& v : verdicts) {
        if (v.failed()) {
            all_ok = false;
            add_violation(rep, "bounds rule " + v.rule + " fails (slack " + ll_str(v.slack) +
                                   "): " + v.citation);
        }
        json one;
        one["rule"] = v.rule;
        one["status"] = verdict_status_str(v.status);
        one["slack"] = v.slack;
        jv.push_back(one);
    }
    rep.lines.push_back(std::string("bounds: ") +
                        (all_ok ? "all applicable rules pass" : "RULE FAILURES"));
    rep.machine["bounds"] = jv;
}

// ------------------------------------------------------------ generating pair

void run_sequence(RunReport& rep, const CatalogEntry& entry) {
    const GeneratingPairSpec& pair = *entry.pair;
    auto viols = validate_pair(pair);
    bool valid = true;
    for (const auto& v : viols) {
        if (v.warning)
            rep.lines.push_back("  warning: " + v.message);
        else {
            valid = false;
            rep.lines.push_back("  violation: " + v.message);
        }
    }
    if (entry.expect.valid) {
        Delta d;
        d.field = "valid";
        d.computed = valid ? "true" : "false";
        d.expected = *entry.expect.valid ? "true" : "false";
        d.ok = valid == *entry.expect.valid;
        rep.deltas.push_back(d);
    }
    if (!valid) {
        rep.lines.push_back("sequence: skipped (invalid pair)");
        return;
    }

    SequenceInvariants s3 = sequence(pair, 3);
    if (entry.expect.at_n3) {
        auto want = *entry.expect.at_n3;
        auto field = [&](const std::string& key, long long computed) {
            if (!want.count(key))
                return;
            Delta d;
            d.field = "n3." + key;
            d.computed = ll_str(computed);
            d.expected = ll_str(want.at(key));
            d.ok = computed == want.at(key);
            rep.deltas.push_back(d);
        };
        field("pg", s3.pg);
        field("K2_X", s3.K2_X);
        field("K2_Sigma", s3.K2_Sigma);
        field("q_X", s3.q_X);
        field("degree", s3.degree);
    }
    if (entry.expect.degree)
        check_value(rep, "degree", s3.degree, entry.expect.degree);
    if (entry.expect.case_label) {
        Delta d;
        d.field = "case";
        d.computed = std::string(1, s3.case_label);
        d.expected = std::string(1, *entry.expect.case_label);
        d.ok = s3.case_label == *entry.expect.case_label;
        rep.deltas.push_back(d);
    }

    // the linear identities and the inequality system along the sequence
    for (long long n = 3; n <= 50; ++n) {
        SequenceInvariants s = sequence(pair, n);
        for (const auto& ic : entry.identities) {
            long long k2 = ic.side == "x" ? s.K2_X : s.K2_Sigma;
            if (ic.a * k2 != ic.b * s.pg + ic.c) {
                add_violation(rep, "identity " + ic.side + " fails at n = " + ll_str(n));
                break;
            }
        }
        SurfaceRecord rec;
        rec.case_label = s.case_label;
        rec.d = s.degree;
        rec.pg = s.pg;
        rec.q_X = s.q_X;
        rec.q_Sigma = s.q_Sigma;
        rec.K2 = s.K2_X;
        for (const auto& v : check(rec))
            if (v.failed())
                add_violation(rep, "bounds rule " + v.rule + " fails at n = " + ll_str(n));
    }

    Rat slope = slope_limit(pair);
    if (entry.expect.slope) {
        Delta d;
        d.field = "slope";
        d.computed = slope.str();
        d.expected = Rat(entry.expect.slope->first, entry.expect.slope->second).str();
        d.ok = slope == Rat(entry.expect.slope->first, entry.expect.slope->second);
        rep.deltas.push_back(d);
    }

    std::ostringstream line;
    line << "sequence: n=3 gives pg = " << s3.pg << ", K2_X = " << s3.K2_X
         << ", K2_Sigma = " << s3.K2_Sigma << ", q_X = " << s3.q_X << ", degree " << s3.degree
         << " (case " << s3.case_label << "), slope limit " << slope.str();
    rep.lines.push_back(line.str());

    json jm;
    jm["slope"] = {slope.num, slope.den};
    jm["n3"] = {{"pg", s3.pg}, {"K2_X", s3.K2_X}, {"K2_Sigma", s3.K2_Sigma},
                {"q_X", s3.q_X}, {"degree", s3.degree}};
    rep.machine["sequence"] = jm;
}

// ----------------------------------------------------------------- record only

void run_record(RunReport& rep, const CatalogEntry& entry) {
    auto verdicts = check(*entry.record);
    bool all_ok = true;
    json jv = json::array();
    std::set<std::string> tight;
    for (const auto& v : verdicts) {
        if (v.failed())
            all_ok = false;
        if (v.status != VerdictStatus::Inapplicable && v.slack == 0)
            tight.insert(v.rule);
        json one;
        one["rule"] = v.rule;
        one["status"] = verdict_status_str(v.status);
        one["slack"] = v.slack;
        one["citation"] = v.citation;
        jv.push_back(one);
        rep.lines.push_back("  " + v.rule + " " + verdict_status_str(v.status) + " (slack " +
                            ll_str(v.slack) + "): " + v.citation);
    }
    if (entry.expect.pass_all) {
        Delta d;
        d.field = "pass_all";
        d.computed = all_ok ? "true" : "false";
        d.expected = *entry.expect.pass_all ? "true" : "false";
        d.ok = all_ok == *entry.expect.pass_all;
        rep.deltas.push_back(d);
    }
    if (entry.expect.tight) {
        for (const auto& rule : *entry.expect.tight) {
            Delta d;
            d.field = "tight." + rule;
            d.computed = tight.count(rule) ? "slack 0" : "not tight";
            d.expected = "slack 0";
            d.ok = tight.count(rule) > 0;
            rep.deltas.push_back(d);
        }
    }
    rep.machine["bounds"] = jv;
}

}  // namespace

std::optional<SurfaceRecord> record_from_cover(const CatalogEntry& entry,
                                               const CoverInvariants& inv) {
    if (!entry.expect.degree || !entry.expect.case_label || inv.pg < 3)
        return std::nullopt;
    SurfaceRecord rec;
    rec.case_label = *entry.expect.case_label;
    rec.d = entry.expect.degree->value;
    rec.pg = inv.pg;
    rec.q_X = inv.q;
    rec.q_Sigma = 0;  // every catalog image is regular (rational or ruled image, or q(Z)=0)
    if (inv.K2_rational.is_integer())
        rec.K2 = inv.K2;
    return rec;
}

RunReport run_entry(const CatalogEntry& entry, const std::set<std::string>& verbs) {
    RunReport rep;
    rep.id = entry.id;
    rep.flags = entry.flags;
    rep.machine["id"] = entry.id;
    rep.machine["kind"] = entry.kind;
    if (!entry.params.empty()) {
        json jp;
        for (const auto& [k, v] : entry.params)
            jp[k] = v;
        rep.machine["params"] = jp;
    }

    auto wants = [&](const char* verb) { return verbs.empty() || verbs.count(verb) > 0; };

    try {
        if (entry.kind == "abelian_cover") {
            CoverInvariants inv;
            bool have_inv = false;
            if (wants("verify"))
                run_verify(rep, entry);
            if (wants("invariants")) {
                run_invariants(rep, entry, inv);
                have_inv = true;
            }
            if (wants("canonical"))
                run_canonical(rep, entry);
            if (wants("bounds")) {
                if (!have_inv)
                    inv = invariants(*entry.bd, false);
                run_bounds_cover(rep, entry, inv);
            }
        } else if (entry.kind == "generating_pair") {
            if (wants("sequence") || wants("bounds"))
                run_sequence(rep, entry);
        } else if (entry.kind == "record_only") {
            if (wants("bounds"))
                run_record(rep, entry);
        }
    } catch (const UnresolvableCohomology& err) {
        rep.exit_status = 3;
        rep.lines.push_back(std::string("unresolvable cohomology: ") + err.what());
        rep.machine["error"] = err.what();
        return rep;
    }

    for (const auto& d : rep.deltas)
        if (!d.ok)
            rep.exit_status = 1;
    if (!rep.violations.empty())
        rep.exit_status = std::max(rep.exit_status, 1);

    json jd = json::array();
    for (const auto& d : rep.deltas) {
        json one;
        one["field"] = d.field;
        one["computed"] = d.computed;
        if (!d.expected.empty())
            one["expected"] = d.expected;
        if (!d.tag.empty())
            one["tag"] = d.tag;
        one["ok"] = d.ok;
        jd.push_back(one);
    }
    rep.machine["deltas"] = jd;
    rep.machine["violations"] = rep.violations;
    if (!rep.flags.empty())
        rep.machine["flags"] = rep.flags;
    rep.machine["status"] = rep.exit_status;
    return rep;
}

std::string render_text(const RunReport& rep) {
    std::ostringstream os;
    os << "== " << rep.id << " ==\n";
    for (const auto& line : rep.lines)
        os << line << "\n";
    for (const auto& d : rep.deltas) {
        if (d.expected.empty()) {
            os << "  " << d.field << " = " << d.computed << "\n";
        } else {
            os << "  " << d.field << " = " << d.computed << " | expect " << d.expected;
            if (!d.tag.empty())
                os << " [" << d.tag << "]";
            os << (d.ok ? "  OK" : "  MISMATCH") << "\n";
        }
    }
    for (const auto& v : rep.violations)
        os << "  VIOLATION: " << v << "\n";
    for (const auto& f : rep.flags)
        os << "  flag: " << f << "\n";
    os << "  status: " << (rep.exit_status == 0 ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace abelcover
