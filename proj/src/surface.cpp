/*
 * Base surfaces and their intersection theory.
 *
 * The engine only ever needs a handful of rational surfaces (P^2, P^1xP^1,
 * del Pezzo surfaces of degree >= 6) plus "declared" bases where cohomology
 * comes from a table. On the computable kinds every cohomology group is
 * evaluated exactly:
 *   - P^2 by the binomial count of plane curves,
 *   - P^1 x P^1 and C x P^1 by the Kunneth formula over the factors,
 *   - del Pezzo blow-ups by Riemann-Roch plus vanishing for nef classes,
 *     peeling fixed (-1)-curves off non-nef classes first.
 * h^2 always goes through Serre duality, h^1 through the exact Euler
 * characteristic, so the three values satisfy chi = h0 - h1 + h2 by
 * construction and Serre duality holds identically.
 */

#include "abelcover/surface.hpp"

#include <algorithm>

namespace abelcover {

namespace {

std::vector<std::vector<long long>> diag_gram(int rank) {
    std::vector<std::vector<long long>> g(rank, std::vector<long long>(rank, 0));
    g[0][0] = 1;
    for (int i = 1; i < rank; ++i)
        g[i][i] = -1;
    return g;
}

void require_rank(const BaseSurface& s, const DivisorClass& d) {
    if (static_cast<int>(d.rank()) != s.rank)
        throw DimensionMismatch("class " + d.str() + " on surface of rank " +
                                std::to_string(s.rank));
}

// cohomology of O_{P^1}(n)
long long line_h0(long long n) { return n >= 0 ? n + 1 : 0; }
long long line_h1(long long n) { return n <= -2 ? -n - 1 : 0; }

Cohomology kunneth(long long a_h0, long long a_h1, long long b_h0, long long b_h1) {
    return Cohomology{a_h0 * b_h0, a_h0 * b_h1 + a_h1 * b_h0, a_h1 * b_h1};
}

long long plane_h0(long long a) { return a >= 0 ? (a + 1) * (a + 2) / 2 : 0; }

// h^0 on a del Pezzo blow-up: strip off negative curves forced into the
// base locus, then apply Riemann-Roch with vanishing to the nef remainder.
long long del_pezzo_h0(const BaseSurface& s, DivisorClass d) {
    const DivisorClass minus_k = -s.canonical;
    for (int guard = 0; guard < 4096; ++guard) {
        if (d.is_zero())
            return 1;
        if (intersect(s, d, minus_k) <= 0)
            return 0;  // -K ample: no effective class pairs nonpositively
        const DivisorClass* fixed = nullptr;
        for (const auto& c : s.neg_curve_list) {
            if (intersect(s, d, c) < 0) {
                if (intersect(s, c, c) >= 0)
                    return 0;  // negative on a moving class: empty system
                fixed = &c;
                break;
            }
        }
        if (!fixed)
            return s.chi_structure() + (intersect(s, d, d) - intersect(s, d, s.canonical)) / 2;
        d -= *fixed;
    }
    throw UnresolvableCohomology("del Pezzo peeling did not terminate for " + d.str());
}

}  // namespace

BaseSurface projective_plane() {
    BaseSurface s;
    s.kind = SurfaceKind::ProjectivePlane;
    s.name = "P2";
    s.rank = 1;
    s.gram = {{1}};
    s.canonical = DivisorClass({-3});
    return s;
}

BaseSurface quadric_product() {
    BaseSurface s;
    s.kind = SurfaceKind::QuadricProduct;
    s.name = "P1xP1";
    s.rank = 2;
    s.gram = {{0, 1}, {1, 0}};
    s.canonical = DivisorClass({-2, -2});
    return s;
}

BaseSurface del_pezzo_blowup(int r) {
    if (r < 1 || r > 3)
        throw InputError("del Pezzo blow-up supports 1..3 points, got " + std::to_string(r));
    BaseSurface s;
    s.kind = SurfaceKind::DelPezzoBlowup;
    s.name = "dP" + std::to_string(9 - r);
    s.rank = r + 1;
    s.gram = diag_gram(s.rank);
    std::vector<long long> k(s.rank, 1);
    k[0] = -3;
    s.canonical = DivisorClass(k);
    s.blown_up_points = r;

    auto cls = [&](std::initializer_list<long long> v) { return DivisorClass(std::vector<long long>(v)); };
    for (int i = 1; i <= r; ++i) {
        std::vector<long long> e(s.rank, 0);
        e[i] = 1;
        s.neg_curve_list.push_back(DivisorClass(e));
    }
    if (r == 1) {
        s.neg_curve_list.push_back(cls({1, -1}));  // ruling of F_1, extremal 0-curve
    } else if (r == 2) {
        s.neg_curve_list.push_back(cls({1, -1, -1}));
    } else {
        s.neg_curve_list.push_back(cls({1, -1, -1, 0}));
        s.neg_curve_list.push_back(cls({1, -1, 0, -1}));
        s.neg_curve_list.push_back(cls({1, 0, -1, -1}));
    }
    return s;
}

BaseSurface declared_product(long long genus, std::map<std::string, CurveBundle> bundles,
                             std::map<std::vector<long long>, ProductFactor> class_factors) {
    BaseSurface s;
    s.kind = SurfaceKind::DeclaredProduct;
    s.name = "C(g=" + std::to_string(genus) + ")xP1";
    s.rank = 2;
    s.gram = {{0, 1}, {1, 0}};
    s.canonical = DivisorClass({-2, 2 * genus - 2});
    s.q = genus;
    s.pg = 0;
    s.curve_genus = genus;
    for (const auto& [bname, b] : bundles) {
        if (b.h0 - b.h1 != b.deg + 1 - genus)
            throw SchemaError("curve bundle '" + bname +
                              "' violates Riemann-Roch: h0-h1 != deg+1-g");
        if (b.h0 < 0 || b.h1 < 0)
            throw SchemaError("curve bundle '" + bname + "' with negative cohomology");
    }
    s.curve_bundles = std::move(bundles);
    for (const auto& [key, f] : class_factors)
        if (!s.curve_bundles.count(f.curve_bundle))
            throw SchemaError("class factor references unknown curve bundle '" + f.curve_bundle +
                              "'");
    s.class_factors = std::move(class_factors);
    return s;
}

BaseSurface declared_surface(int rank, std::vector<std::vector<long long>> gram,
                             DivisorClass canonical, long long q, long long pg,
                             std::map<std::vector<long long>, Cohomology> table) {
    BaseSurface s;
    s.kind = SurfaceKind::Declared;
    s.name = "declared";
    s.rank = rank;
    s.gram = std::move(gram);
    s.canonical = std::move(canonical);
    s.q = q;
    s.pg = pg;
    s.cohomology_table = std::move(table);
    return s;
}

long long intersect(const BaseSurface& s, const DivisorClass& a, const DivisorClass& b) {
    require_rank(s, a);
    require_rank(s, b);
    long long total = 0;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j)
            total += a.c[i] * s.gram[i][j] * b.c[j];
    return total;
}

Rat intersect(const BaseSurface& s, const RationalClass& a, const RationalClass& b) {
    if (static_cast<int>(a.rank()) != s.rank || static_cast<int>(b.rank()) != s.rank)
        throw DimensionMismatch("rational class rank mismatch on " + s.name);
    Rat total;
    for (int i = 0; i < s.rank; ++i)
        for (int j = 0; j < s.rank; ++j)
            total += a.c[i] * Rat(s.gram[i][j]) * b.c[j];
    return total;
}

long long chi_riemann_roch(const BaseSurface& s, const DivisorClass& d) {
    long long dd = intersect(s, d, d);
    long long dk = intersect(s, d, s.canonical);
    if ((dd - dk) % 2 != 0)
        throw EngineError("odd D.(D-K) on " + s.name + " for " + d.str());
    return s.chi_structure() + (dd - dk) / 2;
}

bool is_nef(const BaseSurface& s, const DivisorClass& d) {
    require_rank(s, d);
    switch (s.kind) {
        case SurfaceKind::ProjectivePlane:
            return d.c[0] >= 0;
        case SurfaceKind::QuadricProduct:
            return d.c[0] >= 0 && d.c[1] >= 0;
        case SurfaceKind::DelPezzoBlowup:
            for (const auto& c : s.neg_curve_list)
                if (intersect(s, d, c) < 0)
                    return false;
            return true;
        default:
            throw InputError("is_nef unsupported on declared surface kinds");
    }
}

Cohomology cohomology(const BaseSurface& s, const DivisorClass& d) {
    require_rank(s, d);
    switch (s.kind) {
        case SurfaceKind::ProjectivePlane: {
            long long a = d.c[0];
            return Cohomology{plane_h0(a), 0, plane_h0(-3 - a)};
        }
        case SurfaceKind::QuadricProduct: {
            long long a = d.c[0], b = d.c[1];
            return kunneth(line_h0(a), line_h1(a), line_h0(b), line_h1(b));
        }
        case SurfaceKind::DelPezzoBlowup: {
            Cohomology r;
            r.h0 = del_pezzo_h0(s, d);
            r.h2 = del_pezzo_h0(s, s.canonical - d);  // Serre duality
            r.h1 = r.h0 + r.h2 - chi_riemann_roch(s, d);
            if (r.h1 < 0)
                throw EngineError("negative h1 for " + d.str() + " on " + s.name);
            return r;
        }
        case SurfaceKind::DeclaredProduct: {
            auto it = s.class_factors.find(d.c);
            if (it == s.class_factors.end())
                throw UnresolvableCohomology("no declared Kunneth factorization for class " +
                                             d.str() + " on " + s.name);
            const CurveBundle& cb = s.curve_bundles.at(it->second.curve_bundle);
            long long n = it->second.line_deg;
            // class of M boxtimes O(n) is n*A + deg(M)*B
            if (cb.deg != d.c[1] || n != d.c[0])
                throw SchemaError("Kunneth factorization of " + d.str() +
                                  " disagrees with its lattice class");
            return kunneth(cb.h0, cb.h1, line_h0(n), line_h1(n));
        }
        case SurfaceKind::Declared: {
            auto it = s.cohomology_table.find(d.c);
            if (it == s.cohomology_table.end())
                throw UnresolvableCohomology("no declared cohomology for class " + d.str() +
                                             " on " + s.name);
            return it->second;
        }
    }
    throw EngineError("unreachable surface kind");
}

long long h0(const BaseSurface& s, const DivisorClass& d) { return cohomology(s, d).h0; }

bool is_base_point_free(const BaseSurface& s, const DivisorClass& d) {
    require_rank(s, d);
    if (d.is_zero())
        return true;
    switch (s.kind) {
        case SurfaceKind::ProjectivePlane:
            return d.c[0] >= 0;
        case SurfaceKind::QuadricProduct:
            return d.c[0] >= 0 && d.c[1] >= 0;
        case SurfaceKind::DelPezzoBlowup:
            return is_nef(s, d);  // nef implies free on del Pezzo of degree >= 6
        default:
            return false;
    }
}

}  // namespace abelcover
