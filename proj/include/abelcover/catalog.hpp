#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "abelcover/bounds.hpp"
#include "abelcover/canmap.hpp"
#include "abelcover/genpair.hpp"

namespace abelcover {

// Integer expression in the entry parameters (e.g. "16*m-8"); grammar is
// +, -, *, unary minus, parentheses, decimal literals and identifiers.
long long eval_expr(const std::string& text, const std::map<std::string, long long>& params);

// Expected value together with its provenance tag from the catalog file.
struct TaggedValue {
    long long value = 0;
    std::string tag;  // "PAPER", "DERIVED" or "TRIVIAL"
};

struct ExpectBlock {
    std::optional<TaggedValue> K2, pg, q, chi, degree, pg_Z, gamma_order, isolated_points;
    std::optional<std::vector<Tuple>> gamma_gens;
    std::optional<std::vector<long long>> quotient_orders;
    std::optional<std::vector<std::vector<std::string>>> quotient_groups;
    std::optional<std::vector<std::string>> quotient_dropped;
    std::optional<std::map<std::string, long long>> fixed_part;
    std::optional<char> case_label;
    std::optional<std::pair<long long, long long>> slope;  // exact rational num/den
    std::optional<bool> valid;                             // generating pairs
    std::optional<bool> pass_all;                          // records
    std::optional<std::vector<std::string>> tight;         // rules with slack 0
    std::optional<std::map<std::string, long long>> at_n3; // genpair spot values
};

// Linear identity a * K2 = b * pg + c along the sequence, on the X or
// Sigma side.
struct IdentityCheck {
    std::string side;  // "x" or "sigma"
    long long a = 1, b = 0, c = 0;
    std::string tag;
};

struct CatalogEntry {
    std::string id;
    std::string kind;  // abelian_cover | generating_pair | record_only
    std::map<std::string, long long> params;

    std::optional<BuildingData> bd;  // abelian_cover
    std::optional<std::map<Tuple, DivisorClass>> declared_L_basis;
    DeclaredFacts facts;

    std::optional<GeneratingPairSpec> pair;  // generating_pair
    std::vector<IdentityCheck> identities;

    std::optional<SurfaceRecord> record;  // record_only

    ExpectBlock expect;
    std::vector<std::string> notes;
    std::vector<std::string> flags;  // surfaced discrepancies, never corrected

    nlohmann::json raw;
};

// Load and schema-validate a catalog document. Parameter overrides replace
// entry defaults before any expression is evaluated. Throws SchemaError
// with the offending entry and field.
std::vector<CatalogEntry> load_catalog(const std::string& path,
                                       const std::map<std::string, long long>& overrides = {});

std::vector<CatalogEntry> parse_catalog(const nlohmann::json& doc,
                                        const std::map<std::string, long long>& overrides = {});

// Path of the catalog shipped with the engine.
std::string default_catalog_path();

}  // namespace abelcover
