#pragma once

#include <optional>

#include "abelcover/cover.hpp"

namespace abelcover {

struct DecompositionEntry {
    Tuple chi;
    DivisorClass bundle;  // K_Y + L_chi (K_Y itself for chi = 1)
    long long h0 = 0;
};

// Character decomposition of H^0(K_X); the chi = 1 entry carries pg(Y).
struct CanonicalDecomposition {
    std::vector<DecompositionEntry> entries;   // all characters, deterministic order
    std::vector<Tuple> contributing;           // chi != 1 with h0 > 0
    long long pg_total = 0;                    // = pg(X)
};

CanonicalDecomposition decompose(const BuildingData& bd);

// Facts the engine cannot derive from lattice data; they come from the
// catalog entry and feed the rule-driven degree determination.
struct SystemMapFact {
    DivisorClass cls;      // class A on Y whose system defines the map
    long long degree = 0;  // degree of the |A|-map onto its image
    long long image_pg = -1;
    std::string note;
};

struct QuotientPhiFact {
    long long degree = 0;  // degree of the canonical map of (a smooth model of) Z
    long long image_pg = -1;
    std::string note;
};

struct DeclaredFacts {
    std::optional<SystemMapFact> system_map;
    std::optional<QuotientPhiFact> quotient_phi;
    std::optional<long long> canonical_degree;  // outright declared degree of phi_X
    long long canonical_image_pg = -1;          // paired with canonical_degree
    std::string canonical_degree_note;
    std::vector<std::string> base_point_free;   // extra bpf declarations (class strings)
};

enum class CaseHint { CaseA, CaseB, Undetermined };
std::string case_hint_str(CaseHint c);

struct FactorizationReport {
    Subgroup gamma;                    // annihilator of the contributing characters
    long long degree_factor = 0;       // |Gamma|
    QuotientMap qmap;
    BuildingData quotient_bd;          // cover Z = X/Gamma -> Y
    std::vector<std::pair<std::string, Tuple>> branch_images;  // label -> vbar
    std::vector<std::string> dropped;  // labels with vbar = 0 (unbranched in Z)
    long long pg_Z = 0;                // must equal pg(X)
    std::optional<long long> degree;   // degree of phi_X when a rule completes
    CaseHint hint = CaseHint::Undetermined;
    std::vector<std::string> trace;    // rule trace, human readable
};

FactorizationReport factorization(const BuildingData& bd, const DeclaredFacts& facts);

struct BaseLocusReport {
    // chi -> (branch label -> multiplicity m_v - 1 - r_chi(v))
    std::map<Tuple, std::map<std::string, long long>> per_char;
    std::map<std::string, long long> fixed_part;  // nonzero entries only
    std::optional<long long> isolated_point_count;
    std::vector<std::string> notes;
};

BaseLocusReport base_locus(const BuildingData& bd, const CanonicalDecomposition& dec,
                           const DeclaredFacts& facts);

}  // namespace abelcover
