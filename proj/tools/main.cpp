/*
 * Command-line front end.
 *
 *   abelcover catalog list
 *   abelcover verify <id> | invariants <id> | canonical <id> | run <id|--all>
 *   abelcover genpair <id> --n <k>
 *   abelcover bounds check (<id> | --case .. --d .. --pg .. ...)
 *   abelcover bounds enumerate --case B --d 4..9
 *
 * Common options: --catalog <file>, --param m=3 (repeatable),
 * --format text|machine, --expect strict|report.
 * Exit codes: 0 pass, 1 expect mismatch, 2 input error, 3 unresolvable
 * cohomology.
 */

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

#include "abelcover/runner.hpp"

using namespace abelcover;

namespace {

struct Common {
    std::string catalog_path = default_catalog_path();
    std::vector<std::string> params;
    std::string format = "text";
    std::string expect_mode = "strict";
};

std::map<std::string, long long> parse_params(const std::vector<std::string>& raw) {
    std::map<std::string, long long> out;
    for (const auto& p : raw) {
        auto eq = p.find('=');
        if (eq == std::string::npos)
            throw InputError("--param expects name=value, got '" + p + "'");
        out[p.substr(0, eq)] = std::stoll(p.substr(eq + 1));
    }
    return out;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& entries, const std::string& id) {
    for (const auto& e : entries)
        if (e.id == id)
            return e;
    throw InputError("no catalog entry with id '" + id + "'");
}

int emit(const RunReport& rep, const Common& common) {
    if (common.format == "machine")
        std::cout << rep.machine.dump(2) << "\n";
    else
        std::cout << render_text(rep);
    if (common.expect_mode == "report")
        return rep.exit_status == 3 ? 3 : 0;
    return rep.exit_status;
}

int run_ids(const Common& common, const std::vector<std::string>& ids, bool all,
            const std::set<std::string>& verbs) {
    auto entries = load_catalog(common.catalog_path, parse_params(common.params));
    std::sort(entries.begin(), entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
    if (!all)
        for (const auto& id : ids)
            find_entry(entries, id);  // reject unknown ids before any output
    int status = 0;
    int ran = 0, passed = 0;
    for (const auto& e : entries) {
        bool selected = all;
        for (const auto& id : ids)
            if (e.id == id)
                selected = true;
        if (!selected)
            continue;
        RunReport rep = run_entry(e, verbs);
        ++ran;
        if (rep.exit_status == 0)
            ++passed;
        status = std::max(status, emit(rep, common));
    }
    if (all && common.format == "text")
        std::cout << passed << "/" << ran << " entries passed\n";
    return status;
}

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--catalog", common.catalog_path, "catalog file");
    cmd->add_option("--param", common.params, "parameter override name=value");
    cmd->add_option("--format", common.format, "text | machine")
        ->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--expect", common.expect_mode, "strict | report")
        ->check(CLI::IsMember({"strict", "report"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"abelian-cover canonical map engine"};
    app.require_subcommand(1);
    Common common;

    // catalog list
    auto* cat = app.add_subcommand("catalog", "catalog inspection");
    auto* cat_list = cat->add_subcommand("list", "list entries");
    add_common(cat_list, common);

    std::string id;
    long long seq_n = 3;

    auto* verify = app.add_subcommand("verify", "check the fundamental relations of an entry");
    verify->add_option("id", id)->required();
    add_common(verify, common);

    auto* inv = app.add_subcommand("invariants", "compute K^2, pg, q, chi");
    inv->add_option("id", id)->required();
    add_common(inv, common);

    auto* canonical = app.add_subcommand("canonical", "canonical map report");
    canonical->add_option("id", id)->required();
    add_common(canonical, common);

    auto* run = app.add_subcommand("run", "full pipeline for one entry or --all");
    run->add_option("id", id);
    bool run_all = false;
    run->add_flag("--all", run_all, "run every entry");
    add_common(run, common);

    auto* gp = app.add_subcommand("genpair", "generating pair sequence");
    gp->add_option("id", id)->required();
    gp->add_option("--n", seq_n, "sequence index (>= 3)");
    add_common(gp, common);

    auto* bounds = app.add_subcommand("bounds", "inequality system");
    auto* bc = bounds->add_subcommand("check", "verdicts for a record");
    std::string rec_case = "A";
    long long rec_d = 2, rec_pg = 3, rec_qx = 0, rec_qs = 0;
    long long rec_k2 = -1, rec_m2 = -1, rec_deg_sigma = -1;
    bc->add_option("id", id, "record_only catalog entry");
    bc->add_option("--case", rec_case)->check(CLI::IsMember({"A", "B"}));
    bc->add_option("--d", rec_d);
    bc->add_option("--pg", rec_pg);
    bc->add_option("--q", rec_qx);
    bc->add_option("--qsigma", rec_qs);
    bc->add_option("--k2", rec_k2);
    bc->add_option("--m2", rec_m2);
    bc->add_option("--degsigma", rec_deg_sigma);
    add_common(bc, common);

    auto* be = bounds->add_subcommand("enumerate", "per-degree maximal pg");
    std::string be_case = "B";
    std::string be_range = "4..9";
    be->add_option("--case", be_case)->check(CLI::IsMember({"A", "B"}));
    be->add_option("--d", be_range, "degree range lo..hi");
    add_common(be, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cat_list->parsed()) {
            auto entries = load_catalog(common.catalog_path, parse_params(common.params));
            std::sort(entries.begin(), entries.end(),
                      [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
            for (const auto& e : entries) {
                std::cout << e.id << "  [" << e.kind << "]";
                if (!e.params.empty()) {
                    std::cout << "  params:";
                    for (const auto& [k, v] : e.params)
                        std::cout << " " << k << "=" << v;
                }
                std::cout << "\n";
            }
            return 0;
        }
        if (verify->parsed())
            return run_ids(common, {id}, false, {"verify"});
        if (inv->parsed())
            return run_ids(common, {id}, false, {"invariants"});
        if (canonical->parsed())
            return run_ids(common, {id}, false, {"canonical"});
        if (run->parsed()) {
            if (!run_all && id.empty())
                throw InputError("run requires an entry id or --all");
            return run_ids(common, run_all ? std::vector<std::string>{} :
                                             std::vector<std::string>{id},
                           run_all, {});
        }
        if (gp->parsed()) {
            auto entries = load_catalog(common.catalog_path, parse_params(common.params));
            const CatalogEntry& e = find_entry(entries, id);
            if (!e.pair)
                throw InputError("'" + id + "' is not a generating pair");
            RunReport rep = run_entry(e, {"sequence"});
            SequenceInvariants s = sequence(*e.pair, seq_n);
            std::ostringstream os;
            os << "n = " << s.n << ": pg = " << s.pg << ", q_X = " << s.q_X
               << ", K2_X = " << s.K2_X << ", K2_Sigma = " << s.K2_Sigma << ", degree "
               << s.degree << " (case " << s.case_label << ")";
            rep.lines.push_back(os.str());
            rep.machine["n"] = {{"n", s.n},       {"pg", s.pg},
                                {"q_X", s.q_X},   {"K2_X", s.K2_X},
                                {"K2_Sigma", s.K2_Sigma}, {"degree", s.degree}};
            return emit(rep, common);
        }
        if (bc->parsed()) {
            if (!id.empty()) {
                auto entries = load_catalog(common.catalog_path, parse_params(common.params));
                const CatalogEntry& e = find_entry(entries, id);
                if (!e.record)
                    throw InputError("'" + id + "' is not a record_only entry");
                RunReport rep = run_entry(e, {"bounds"});
                return emit(rep, common);
            }
            SurfaceRecord rec;
            rec.case_label = rec_case[0];
            rec.d = rec_d;
            rec.pg = rec_pg;
            rec.q_X = rec_qx;
            rec.q_Sigma = rec_qs;
            if (rec_k2 >= 0)
                rec.K2 = rec_k2;
            if (rec_m2 >= 0)
                rec.M2 = rec_m2;
            if (rec_deg_sigma >= 0)
                rec.degSigma = rec_deg_sigma;
            bool any_fail = false;
            nlohmann::json jv = nlohmann::json::array();
            for (const auto& v : check(rec)) {
                any_fail = any_fail || v.failed();
                if (common.format == "machine") {
                    nlohmann::json one;
                    one["rule"] = v.rule;
                    one["status"] = verdict_status_str(v.status);
                    one["slack"] = v.slack;
                    one["citation"] = v.citation;
                    jv.push_back(one);
                } else {
                    std::cout << v.rule << " " << verdict_status_str(v.status) << " (slack "
                              << v.slack << "): " << v.citation << "\n";
                }
            }
            if (common.format == "machine")
                std::cout << jv.dump(2) << "\n";
            return any_fail ? 1 : 0;
        }
        if (be->parsed()) {
            auto dots = be_range.find("..");
            if (dots == std::string::npos)
                throw InputError("--d expects lo..hi");
            long long lo = std::stoll(be_range.substr(0, dots));
            long long hi = std::stoll(be_range.substr(dots + 2));
            auto rows = enumerate_feasible(be_case[0], lo, hi);
            nlohmann::json jrows = nlohmann::json::array();
            for (const auto& r : rows) {
                if (common.format == "machine") {
                    nlohmann::json one;
                    one["d"] = r.d;
                    if (r.max_pg)
                        one["max_pg"] = *r.max_pg;
                    else
                        one["max_pg"] = "unbounded";
                    if (r.stated_pg)
                        one["stated_pg"] = *r.stated_pg;
                    one["discrepancy"] = r.discrepancy;
                    jrows.push_back(one);
                } else {
                    std::cout << "d = " << r.d << ": max pg "
                              << (r.max_pg ? std::to_string(*r.max_pg) : "unbounded");
                    if (r.stated_pg)
                        std::cout << " (stated " << *r.stated_pg
                                  << (r.discrepancy ? ", DISCREPANCY FLAGGED" : ", agrees")
                                  << ")";
                    std::cout << "\n";
                }
            }
            if (common.format == "machine")
                std::cout << jrows.dump(2) << "\n";
            return 0;
        }
    } catch (const UnresolvableCohomology& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const EngineError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
