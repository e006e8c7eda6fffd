/*
 * Catalog documents: every worked example ships as a declarative JSON
 * entry (surface, group, branch data, declared geometric facts, expected
 * outputs with provenance tags). Integer fields may be expressions in the
 * entry parameters so that parameterized families (m, n) stay exact under
 * command-line overrides.
 */

#include "abelcover/catalog.hpp"

#include <cctype>
#include <fstream>

namespace abelcover {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------- expressions

struct ExprParser {
    const std::string& s;
    std::size_t pos = 0;
    const std::map<std::string, long long>& params;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    long long expr() {
        long long v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }
    long long term() {
        long long v = factor();
        while (eat('*'))
            v *= factor();
        return v;
    }
    long long factor() {
        skip();
        if (eat('-'))
            return -factor();
        if (eat('(')) {
            long long v = expr();
            if (!eat(')'))
                throw SchemaError("expected ')' in expression '" + s + "'");
            return v;
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            long long v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            return v;
        }
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            std::string name;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                      s[pos] == '_'))
                name += s[pos++];
            auto it = params.find(name);
            if (it == params.end())
                throw SchemaError("unknown parameter '" + name + "' in expression '" + s + "'");
            return it->second;
        }
        throw SchemaError("cannot parse expression '" + s + "' at position " +
                          std::to_string(pos));
    }
};

}  // namespace

long long eval_expr(const std::string& text, const std::map<std::string, long long>& params) {
    ExprParser p{text, 0, params};
    long long v = p.expr();
    p.skip();
    if (p.pos != text.size())
        throw SchemaError("trailing characters in expression '" + text + "'");
    return v;
}

namespace {

using Params = std::map<std::string, long long>;

long long to_int(const json& j, const Params& params, const std::string& where) {
    if (j.is_number_integer())
        return j.get<long long>();
    if (j.is_string())
        return eval_expr(j.get<std::string>(), params);
    throw SchemaError(where + ": expected integer or expression");
}

std::vector<long long> to_int_vector(const json& j, const Params& params,
                                     const std::string& where) {
    if (!j.is_array())
        throw SchemaError(where + ": expected array");
    std::vector<long long> v;
    for (const auto& x : j)
        v.push_back(to_int(x, params, where));
    return v;
}

DivisorClass to_class(const json& j, const Params& params, const std::string& where) {
    return DivisorClass(to_int_vector(j, params, where));
}

TaggedValue to_tagged(const json& j, const Params& params, const std::string& where) {
    TaggedValue t;
    if (j.is_object()) {
        if (!j.contains("value"))
            throw SchemaError(where + ": tagged value without 'value'");
        t.value = to_int(j.at("value"), params, where);
        t.tag = j.value("tag", "DERIVED");
    } else {
        t.value = to_int(j, params, where);
        t.tag = "DERIVED";
    }
    return t;
}

BaseSurface parse_surface(const json& j, const Params& params, const std::string& id) {
    const std::string where = id + "/surface";
    std::string kind = j.value("kind", "");
    if (kind == "projective_plane")
        return projective_plane();
    if (kind == "quadric_product")
        return quadric_product();
    if (kind == "del_pezzo_blowup")
        return del_pezzo_blowup(j.value("points", 0));
    if (kind == "declared_product") {
        std::map<std::string, CurveBundle> bundles;
        for (const auto& [name, bj] : j.at("curve_bundles").items()) {
            CurveBundle b;
            b.deg = to_int(bj.at("deg"), params, where);
            b.h0 = to_int(bj.at("h0"), params, where);
            b.h1 = to_int(bj.at("h1"), params, where);
            bundles[name] = b;
        }
        std::map<std::vector<long long>, ProductFactor> factors;
        for (const auto& cj : j.at("classes")) {
            ProductFactor f;
            f.curve_bundle = cj.at("curve").get<std::string>();
            f.line_deg = to_int(cj.at("line"), params, where);
            factors[to_int_vector(cj.at("cls"), params, where)] = f;
        }
        return declared_product(to_int(j.at("genus"), params, where), std::move(bundles),
                                std::move(factors));
    }
    if (kind == "declared") {
        std::map<std::vector<long long>, Cohomology> table;
        for (const auto& cj : j.at("cohomology")) {
            Cohomology c;
            c.h0 = to_int(cj.at("h0"), params, where);
            c.h1 = to_int(cj.at("h1"), params, where);
            c.h2 = to_int(cj.at("h2"), params, where);
            table[to_int_vector(cj.at("cls"), params, where)] = c;
        }
        int rank = j.at("rank").get<int>();
        std::vector<std::vector<long long>> gram;
        for (const auto& row : j.at("gram"))
            gram.push_back(to_int_vector(row, params, where));
        return declared_surface(rank, std::move(gram),
                                to_class(j.at("canonical"), params, where),
                                to_int(j.at("q"), params, where),
                                to_int(j.at("pg"), params, where), std::move(table));
    }
    throw SchemaError(where + ": unknown surface kind '" + kind + "'");
}

ConfigurationAssumption parse_config(const json& j, const std::string& id) {
    ConfigurationAssumption cfg;
    if (j.is_null())
        return cfg;
    std::string mode = j.value("mode", "general_position");
    if (mode == "general_position")
        cfg.mode = ConfigMode::GeneralPosition;
    else if (mode == "snc")
        cfg.mode = ConfigMode::SimpleNormalCrossings;
    else if (mode == "explicit_points")
        cfg.mode = ConfigMode::ExplicitPoints;
    else
        throw SchemaError(id + "/config: unknown mode '" + mode + "'");
    if (j.contains("points"))
        for (const auto& pj : j.at("points")) {
            ExplicitPoint pt;
            pt.id = pj.value("id", "");
            for (const auto& lbl : pj.at("incident"))
                pt.incident.push_back(lbl.get<std::string>());
            cfg.points.push_back(pt);
        }
    return cfg;
}

DeclaredFacts parse_facts(const json& j, const Params& params, const std::string& id) {
    DeclaredFacts facts;
    if (j.is_null())
        return facts;
    const std::string where = id + "/facts";
    if (j.contains("system_map")) {
        const auto& sj = j.at("system_map");
        SystemMapFact f;
        f.cls = to_class(sj.at("cls"), params, where);
        f.degree = to_int(sj.at("degree"), params, where);
        f.image_pg = sj.contains("image_pg") ? to_int(sj.at("image_pg"), params, where) : -1;
        f.note = sj.value("note", "");
        facts.system_map = f;
    }
    if (j.contains("quotient_phi")) {
        const auto& qj = j.at("quotient_phi");
        QuotientPhiFact f;
        f.degree = to_int(qj.at("degree"), params, where);
        f.image_pg = qj.contains("image_pg") ? to_int(qj.at("image_pg"), params, where) : -1;
        f.note = qj.value("note", "");
        facts.quotient_phi = f;
    }
    if (j.contains("canonical_degree")) {
        const auto& cj = j.at("canonical_degree");
        facts.canonical_degree = to_int(cj.at("degree"), params, where);
        facts.canonical_image_pg =
            cj.contains("image_pg") ? to_int(cj.at("image_pg"), params, where) : -1;
        facts.canonical_degree_note = cj.value("note", "");
    }
    if (j.contains("base_point_free"))
        for (const auto& cj : j.at("base_point_free"))
            facts.base_point_free.push_back(to_class(cj, params, where).str());
    return facts;
}

ExpectBlock parse_expect(const json& j, const Params& params, const std::string& id) {
    ExpectBlock e;
    if (j.is_null())
        return e;
    const std::string where = id + "/expect";
    auto tagged = [&](const char* key) -> std::optional<TaggedValue> {
        if (!j.contains(key))
            return std::nullopt;
        return to_tagged(j.at(key), params, where + "/" + key);
    };
    e.K2 = tagged("K2");
    e.pg = tagged("pg");
    e.q = tagged("q");
    e.chi = tagged("chi");
    e.degree = tagged("degree");
    e.pg_Z = tagged("pg_Z");
    e.gamma_order = tagged("gamma_order");
    e.isolated_points = tagged("isolated_points");
    if (j.contains("gamma_gens")) {
        std::vector<Tuple> gens;
        for (const auto& gj : j.at("gamma_gens"))
            gens.push_back(to_int_vector(gj, params, where + "/gamma_gens"));
        e.gamma_gens = gens;
    }
    if (j.contains("quotient_orders"))
        e.quotient_orders = to_int_vector(j.at("quotient_orders"), params, where);
    if (j.contains("quotient_groups")) {
        std::vector<std::vector<std::string>> groups;
        for (const auto& gj : j.at("quotient_groups")) {
            std::vector<std::string> grp;
            for (const auto& lbl : gj)
                grp.push_back(lbl.get<std::string>());
            groups.push_back(grp);
        }
        e.quotient_groups = groups;
    }
    if (j.contains("quotient_dropped")) {
        std::vector<std::string> dropped;
        for (const auto& lbl : j.at("quotient_dropped"))
            dropped.push_back(lbl.get<std::string>());
        e.quotient_dropped = dropped;
    }
    if (j.contains("fixed_part")) {
        std::map<std::string, long long> fp;
        for (const auto& [lbl, vj] : j.at("fixed_part").items())
            fp[lbl] = to_int(vj, params, where + "/fixed_part");
        e.fixed_part = fp;
    }
    if (j.contains("case")) {
        std::string c = j.at("case").get<std::string>();
        if (c != "A" && c != "B")
            throw SchemaError(where + "/case: expected 'A' or 'B'");
        e.case_label = c[0];
    }
    if (j.contains("slope")) {
        auto v = to_int_vector(j.at("slope"), params, where + "/slope");
        if (v.size() != 2 || v[1] == 0)
            throw SchemaError(where + "/slope: expected [num, den]");
        e.slope = std::make_pair(v[0], v[1]);
    }
    if (j.contains("valid"))
        e.valid = j.at("valid").get<bool>();
    if (j.contains("pass_all"))
        e.pass_all = j.at("pass_all").get<bool>();
    if (j.contains("tight")) {
        std::vector<std::string> t;
        for (const auto& r : j.at("tight"))
            t.push_back(r.get<std::string>());
        e.tight = t;
    }
    if (j.contains("at_n3")) {
        std::map<std::string, long long> vals;
        for (const auto& [key, vj] : j.at("at_n3").items())
            vals[key] = to_int(vj, params, where + "/at_n3");
        e.at_n3 = vals;
    }
    return e;
}

CatalogEntry parse_entry(const json& j, const Params& overrides) {
    CatalogEntry e;
    e.raw = j;
    if (!j.contains("id"))
        throw SchemaError("entry without id");
    e.id = j.at("id").get<std::string>();
    e.kind = j.value("kind", "");

    if (j.contains("params"))
        for (const auto& [key, vj] : j.at("params").items())
            e.params[key] = vj.get<long long>();
    for (const auto& [key, val] : overrides)
        if (e.params.count(key))
            e.params[key] = val;

    if (j.contains("notes"))
        for (const auto& n : j.at("notes"))
            e.notes.push_back(n.get<std::string>());
    if (j.contains("flags"))
        for (const auto& n : j.at("flags"))
            e.flags.push_back(n.get<std::string>());

    if (e.kind == "abelian_cover") {
        BaseSurface surface;
        try {
            surface = parse_surface(j.at("surface"), e.params, e.id);
        } catch (const SchemaError&) {
            throw;
        } catch (const EngineError& err) {
            throw SchemaError(e.id + "/surface: " + err.what());
        }
        GroupSpec group;
        try {
            group = GroupSpec(to_int_vector(j.at("group"), e.params, e.id + "/group"));
        } catch (const InputError& err) {
            throw SchemaError(e.id + "/group: " + err.what());
        }
        std::vector<BranchComponent> branch;
        for (const auto& bj : j.at("branch")) {
            BranchComponent b;
            b.label = bj.at("label").get<std::string>();
            b.v = to_int_vector(bj.at("v"), e.params, e.id + "/branch");
            if (b.v.size() != group.ngens())
                throw SchemaError(e.id + "/branch/" + b.label + ": inertia tuple length");
            if (group.is_zero(b.v))
                throw SchemaError(e.id + "/branch/" + b.label + ": inertia element is zero");
            b.cls = to_class(bj.at("cls"), e.params, e.id + "/branch");
            b.declared_smooth = bj.value("smooth", true);
            b.declared_irreducible = bj.value("irreducible", true);
            branch.push_back(b);
        }
        ConfigurationAssumption cfg =
            parse_config(j.contains("config") ? j.at("config") : json(), e.id);
        try {
            e.bd = make_building_data(std::move(surface), group, std::move(branch), cfg);
        } catch (const InputError& err) {
            throw SchemaError(e.id + ": " + err.what());
        }
        e.bd->declared_connected = j.value("connected", false);
        if (j.contains("L_basis")) {
            std::map<Tuple, DivisorClass> basis;
            for (const auto& lj : j.at("L_basis")) {
                Tuple chi = group.reduce(to_int_vector(lj.at("chi"), e.params, e.id + "/L_basis"));
                basis[chi] = to_class(lj.at("cls"), e.params, e.id + "/L_basis");
            }
            e.declared_L_basis = basis;
        }
        e.facts = parse_facts(j.contains("facts") ? j.at("facts") : json(), e.params, e.id);
    } else if (e.kind == "generating_pair") {
        const auto& pj = j.at("pair");
        GeneratingPairSpec p;
        p.name = e.id;
        p.nu = to_int(pj.at("nu"), e.params, e.id);
        p.pg_W = to_int(pj.at("pg_W"), e.params, e.id);
        p.pg_V = to_int(pj.at("pg_V"), e.params, e.id);
        p.K2_W = to_int(pj.at("K2_W"), e.params, e.id);
        p.K2_V = to_int(pj.at("K2_V"), e.params, e.id);
        p.L2 = to_int(pj.at("L2"), e.params, e.id);
        p.h0_L = to_int(pj.at("h0_L"), e.params, e.id);
        p.g = to_int(pj.at("g"), e.params, e.id);
        p.g_bar = to_int(pj.at("g_bar"), e.params, e.id);
        p.C_hyperelliptic = pj.value("hyperelliptic", false);
        p.L_equals_KW = pj.value("L_equals_KW", false);
        p.notes = pj.value("notes", "");
        e.pair = p;
        if (j.contains("identities"))
            for (const auto& ij : j.at("identities")) {
                IdentityCheck ic;
                ic.side = ij.at("side").get<std::string>();
                if (ic.side != "x" && ic.side != "sigma")
                    throw SchemaError(e.id + "/identities: side must be 'x' or 'sigma'");
                ic.a = to_int(ij.at("a"), e.params, e.id);
                ic.b = to_int(ij.at("b"), e.params, e.id);
                ic.c = to_int(ij.at("c"), e.params, e.id);
                ic.tag = ij.value("tag", "DERIVED");
                e.identities.push_back(ic);
            }
    } else if (e.kind == "record_only") {
        const auto& rj = j.at("record");
        SurfaceRecord r;
        std::string c = rj.at("case").get<std::string>();
        if (c != "A" && c != "B")
            throw SchemaError(e.id + "/record: case must be 'A' or 'B'");
        r.case_label = c[0];
        r.d = to_int(rj.at("d"), e.params, e.id);
        r.pg = to_int(rj.at("pg"), e.params, e.id);
        r.q_X = to_int(rj.at("q_X"), e.params, e.id);
        r.q_Sigma = rj.contains("q_Sigma") ? to_int(rj.at("q_Sigma"), e.params, e.id) : 0;
        if (rj.contains("K2"))
            r.K2 = to_int(rj.at("K2"), e.params, e.id);
        if (rj.contains("M2"))
            r.M2 = to_int(rj.at("M2"), e.params, e.id);
        if (rj.contains("degSigma"))
            r.degSigma = to_int(rj.at("degSigma"), e.params, e.id);
        e.record = r;
    } else {
        throw SchemaError(e.id + ": unknown entry kind '" + e.kind + "'");
    }

    e.expect = parse_expect(j.contains("expect") ? j.at("expect") : json(), e.params, e.id);
    return e;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const json& doc, const Params& overrides) {
    if (!doc.is_object() || !doc.contains("entries"))
        throw SchemaError("catalog document must contain an 'entries' array");
    std::vector<CatalogEntry> entries;
    for (const auto& j : doc.at("entries"))
        entries.push_back(parse_entry(j, overrides));
    return entries;
}

std::vector<CatalogEntry> load_catalog(const std::string& path, const Params& overrides) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open catalog file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& err) {
        throw SchemaError("catalog '" + path + "': " + err.what());
    }
    return parse_catalog(doc, overrides);
}

std::string default_catalog_path() { return std::string(ABELCOVER_DATA_DIR) + "/catalog.json"; }

}  // namespace abelcover
