#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abelcover/lattice.hpp"

namespace abelcover {

// Supported base surfaces Y. The three computable kinds carry their full
// intersection theory; the Declared kinds are numerical lattices plus a
// user-supplied cohomology table (needed for irregular bases, where the
// numerical class of a bundle does not determine its cohomology).
enum class SurfaceKind {
    ProjectivePlane,
    QuadricProduct,   // P^1 x P^1
    DelPezzoBlowup,   // blow-up of P^2 in r <= 3 general points
    DeclaredProduct,  // C x P^1 for a curve C of genus g, declared curve bundles
    Declared,         // arbitrary lattice with a fully declared cohomology table
};

struct Cohomology {
    long long h0 = 0;
    long long h1 = 0;
    long long h2 = 0;
    bool operator==(const Cohomology& o) const { return h0 == o.h0 && h1 == o.h1 && h2 == o.h2; }
};

// Line bundle on the curve factor of a DeclaredProduct, identified by name.
// Validated against Riemann-Roch on the curve: h0 - h1 = deg + 1 - g.
struct CurveBundle {
    long long deg = 0;
    long long h0 = 0;
    long long h1 = 0;
};

// Kunneth factorization of a lattice class on a DeclaredProduct:
// the bundle is (curve bundle) boxtimes O_{P^1}(line_deg).
struct ProductFactor {
    std::string curve_bundle;
    long long line_deg = 0;
};

struct BaseSurface {
    SurfaceKind kind = SurfaceKind::ProjectivePlane;
    std::string name;
    int rank = 1;
    std::vector<std::vector<long long>> gram;
    DivisorClass canonical;
    long long q = 0;
    long long pg = 0;

    // DelPezzoBlowup: number of blown-up points and the generators of the
    // Mori cone used by the nef test (for r=1 this includes the fiber class,
    // which is the extremal 0-curve of F_1).
    int blown_up_points = 0;
    std::vector<DivisorClass> neg_curve_list;

    // DeclaredProduct
    long long curve_genus = 0;
    std::map<std::string, CurveBundle> curve_bundles;
    std::map<std::vector<long long>, ProductFactor> class_factors;

    // Declared
    std::map<std::vector<long long>, Cohomology> cohomology_table;

    bool computable() const {
        return kind == SurfaceKind::ProjectivePlane || kind == SurfaceKind::QuadricProduct ||
               kind == SurfaceKind::DelPezzoBlowup;
    }
    long long chi_structure() const { return 1 - q + pg; }
};

BaseSurface projective_plane();
BaseSurface quadric_product();
BaseSurface del_pezzo_blowup(int r);

// C x P^1 with C of genus g. Basis: index 0 = fiber of the projection to
// P^1 (a copy of C), index 1 = a copy of P^1. The declared curve bundles
// are cross-checked against Riemann-Roch on C.
BaseSurface declared_product(long long genus, std::map<std::string, CurveBundle> bundles,
                             std::map<std::vector<long long>, ProductFactor> class_factors);

BaseSurface declared_surface(int rank, std::vector<std::vector<long long>> gram,
                             DivisorClass canonical, long long q, long long pg,
                             std::map<std::vector<long long>, Cohomology> table);

// A^t . gram . B
long long intersect(const BaseSurface& s, const DivisorClass& a, const DivisorClass& b);
Rat intersect(const BaseSurface& s, const RationalClass& a, const RationalClass& b);

// chi(O_Y) + D.(D - K)/2, the sheaf Euler characteristic by Riemann-Roch;
// purely numerical, so available on every kind.
long long chi_riemann_roch(const BaseSurface& s, const DivisorClass& d);

// Nef test against the stored cone generators. Computable kinds only.
bool is_nef(const BaseSurface& s, const DivisorClass& d);

// (h0, h1, h2) of O_Y(D). Computable kinds are evaluated exactly; Declared
// kinds are looked up (DeclaredProduct via the Kunneth rule). Throws
// UnresolvableCohomology when no route exists.
Cohomology cohomology(const BaseSurface& s, const DivisorClass& d);

long long h0(const BaseSurface& s, const DivisorClass& d);

// Conservative base-point-freeness test used by the base-locus analysis:
// true only when freeness is certain on the given kind (|O|, nonnegative
// bidegrees, nef classes on a del Pezzo). Never true on Declared kinds.
bool is_base_point_free(const BaseSurface& s, const DivisorClass& d);

}  // namespace abelcover
