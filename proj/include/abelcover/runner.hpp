#pragma once

#include <set>

#include "abelcover/catalog.hpp"

namespace abelcover {

struct Delta {
    std::string field;
    std::string computed;
    std::string expected;
    std::string tag;
    bool ok = true;
};

struct RunReport {
    std::string id;
    std::vector<std::string> lines;       // human-readable report
    std::vector<Delta> deltas;            // expect comparisons
    std::vector<std::string> violations;  // consistency failures
    std::vector<std::string> flags;       // surfaced discrepancies from the entry
    int exit_status = 0;                  // 0 ok, 1 mismatch, 3 unresolvable cohomology
    nlohmann::json machine;

    bool passed() const { return exit_status == 0; }
};

// Applicable verbs: verify, invariants, canonical (abelian covers),
// sequence (generating pairs), bounds (all kinds). An empty set runs
// everything applicable.
RunReport run_entry(const CatalogEntry& entry, const std::set<std::string>& verbs = {});

std::string render_text(const RunReport& rep);

// Build the inequality-system record for an abelian entry from computed
// invariants plus the expected degree and case.
std::optional<SurfaceRecord> record_from_cover(const CatalogEntry& entry,
                                               const CoverInvariants& inv);

}  // namespace abelcover
