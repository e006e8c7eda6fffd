#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelcover/group.hpp"
#include "abelcover/surface.hpp"

namespace abelcover {

enum class ConfigMode { GeneralPosition, ExplicitPoints, SimpleNormalCrossings };

struct ExplicitPoint {
    std::string id;
    std::vector<std::string> incident;  // labels of components through the point
};

struct ConfigurationAssumption {
    ConfigMode mode = ConfigMode::GeneralPosition;
    std::vector<ExplicitPoint> points;
};

// One group of branch components sharing an inertia pair, encoded by the
// nonzero element v. Smoothness and irreducibility of the members are
// declarations: they are geometric facts the lattice cannot decide.
struct BranchComponent {
    std::string label;
    Tuple v;
    DivisorClass cls;
    bool declared_smooth = true;
    bool declared_irreducible = true;
};

struct BuildingData {
    BaseSurface surface;
    GroupSpec group;
    std::vector<BranchComponent> branch;
    std::map<Tuple, DivisorClass> L;  // complete map, one entry per chi != 0
    ConfigurationAssumption config;
    bool declared_connected = false;  // used when the base is a Declared kind

    const DivisorClass& L_of(const Tuple& chi) const;  // L_0 = O_Y
    DivisorClass branch_total() const;
};

// Solve the reduced fundamental relations d_i L_i = sum (d_i r_i / m_v) D_v
// for the given generating characters. Throws NonDivisible when some
// coordinate is not divisible by d_i (no cover exists with this branch).
std::map<Tuple, DivisorClass> solve_reduced(const BaseSurface& surface, const GroupSpec& group,
                                            const std::vector<BranchComponent>& branch,
                                            const std::vector<Tuple>& basis_chars);

// Extend reduced data to the full character table,
// L_chi = sum a_i L_i - sum_v floor(sum a_i r_i(v) / m_v) D_v.
std::map<Tuple, DivisorClass> all_L_chi(const BaseSurface& surface, const GroupSpec& group,
                                        const std::vector<BranchComponent>& branch,
                                        const std::vector<Tuple>& basis_chars,
                                        const std::map<Tuple, DivisorClass>& reduced);

// Canonical dual basis e_i^* of G^*
std::vector<Tuple> canonical_basis_chars(const GroupSpec& group);

// Convenience: solve + extend with the canonical dual basis.
BuildingData make_building_data(BaseSurface surface, GroupSpec group,
                                std::vector<BranchComponent> branch, ConfigurationAssumption cfg);

struct RelationViolation {
    Tuple chi;
    Tuple chi2;
    DivisorClass discrepancy;  // (L_chi + L_chi') - (L_chichi' + sum eps D)
    std::string str() const;
};

// All |G^*|^2 fundamental relations, empty iff the data is a valid cover.
std::vector<RelationViolation> verify_fundamental(const BuildingData& bd);

// ord(chi) L_chi = sum (ord(chi) r_chi(v) / m_v) D_v for every character;
// returns the characters where it fails (always empty on valid data over a
// torsion-free lattice).
std::vector<Tuple> check_d_power(const BuildingData& bd);

// true iff the inertia elements generate G (the cover does not factor
// through an unramified cover)
bool totally_ramified(const BuildingData& bd);

enum class TriState { Yes, No, Undetermined };
std::string tristate_str(TriState t);

struct FailingPoint {
    std::string description;
    std::vector<std::string> labels;
    int condition = 0;  // which smoothness condition failed (1,2,3)
};

struct SmoothnessReport {
    TriState smooth = TriState::Undetermined;
    std::vector<FailingPoint> failing;
    std::vector<std::string> notes;
};

SmoothnessReport smoothness_check(const BuildingData& bd);

struct CoverInvariants {
    Rat K2_rational;           // |G| (K_Y + sum (1 - 1/m_v) D_v)^2, always defined
    long long K2 = 0;          // integral value (when it is one)
    long long pg = 0;
    long long q = 0;
    long long chi = 0;         // 1 - q + pg
    RationalClass adjunction_class;
    TriState minimal_general_type = TriState::Undetermined;
};

// Numerical invariants of the covering surface. With require_integral_k2
// (the default, appropriate for covers asserted smooth) a fractional K^2
// raises NonIntegralK2; quotient covers with quotient singularities may
// legitimately carry a fractional value and are evaluated with the flag off.
CoverInvariants invariants(const BuildingData& bd, bool require_integral_k2 = true);

// true iff all branch components share one inertia element generating a
// cyclic G; v0 receives that element
bool is_simple_cyclic(const BuildingData& bd, Tuple* v0 = nullptr);

// K_Y + (d-1) L for a simple cyclic cover with relation dL = D
DivisorClass simple_cyclic_adjunction(const BuildingData& bd);

}  // namespace abelcover
