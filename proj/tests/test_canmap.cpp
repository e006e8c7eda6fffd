#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace abelcover;
using abelcover::testing::entry_by_id;
using abelcover::testing::shipped_catalog;

namespace {

long long h0_of(const CanonicalDecomposition& dec, const Tuple& chi) {
    for (const auto& e : dec.entries)
        if (e.chi == chi)
            return e.h0;
    FAIL("missing character entry");
    return -1;
}

std::set<std::set<std::string>> regrouping(const FactorizationReport& fac) {
    std::map<Tuple, std::set<std::string>> by_image;
    for (const auto& [label, vbar] : fac.branch_images)
        by_image[vbar].insert(label);
    std::set<std::set<std::string>> out;
    for (const auto& [vbar, labels] : by_image)
        out.insert(labels);
    return out;
}

}  // namespace

TEST_CASE("canonical decomposition of the section space") {
    auto entries = shipped_catalog();

    const auto& tan = entry_by_id(entries, "ex-4.7-d3-tan");
    CanonicalDecomposition dec = decompose(*tan.bd);
    CHECK(dec.pg_total == 8);
    CHECK(dec.contributing == std::vector<Tuple>{{1, 1}, {2, 2}});
    CHECK(h0_of(dec, {1, 1}) == 1);
    CHECK(h0_of(dec, {2, 2}) == 7);
    CHECK(h0_of(dec, {1, 0}) == 0);

    const auto& quintic = entry_by_id(entries, "ex-4.9-d5-quintic");
    CanonicalDecomposition qdec = decompose(*quintic.bd);
    CHECK(qdec.pg_total == 4);
    CHECK(qdec.contributing == std::vector<Tuple>{{3, 0}, {4, 0}});
    CHECK(h0_of(qdec, {3, 0}) == 1);
    CHECK(h0_of(qdec, {4, 0}) == 3);

    const auto& persson = entry_by_id(entries, "ex-4.2-persson");
    CanonicalDecomposition pdec = decompose(*persson.bd);
    CHECK(pdec.pg_total == 3);
    REQUIRE(pdec.contributing.size() == 1);
    CHECK(pdec.contributing[0] == Tuple{1, 1, 1, 1});
    CHECK(h0_of(pdec, {1, 1, 1, 1}) == 3);

    // the decomposition always sums to pg of the cover
    for (const auto& e : entries)
        if (e.bd)
            CHECK(decompose(*e.bd).pg_total == invariants(*e.bd, false).pg);
}

TEST_CASE("factorization subgroup and quotient cover") {
    auto entries = shipped_catalog();

    SUBCASE("degree 3 over the del Pezzo of degree 6") {
        const auto& e = entry_by_id(entries, "ex-4.7-d3-tan");
        FactorizationReport fac = factorization(*e.bd, e.facts);
        CHECK(fac.gamma.order() == 3);
        CHECK(fac.gamma.contains(e.bd->group, {1, 2}));
        CHECK(fac.qmap.quotient.orders == std::vector<long long>{3});
        CHECK(regrouping(fac) ==
              std::set<std::set<std::string>>{{"D10", "D01", "D22"}});
        CHECK(fac.dropped.empty());
        CHECK(fac.pg_Z == 8);
        REQUIRE(fac.degree.has_value());
        CHECK(*fac.degree == 3);
        CHECK(fac.hint == CaseHint::CaseB);
        // the quotient is a simple cyclic cover with adjoint class F1+F2+F3
        CHECK(simple_cyclic_adjunction(fac.quotient_bd) ==
              DivisorClass({3, -1, -1, -1}));
        CHECK(verify_fundamental(fac.quotient_bd).empty());
    }

    SUBCASE("degree 6 over the quadric") {
        const auto& e = entry_by_id(entries, "ex-4.6-d6-quadric");
        FactorizationReport fac = factorization(*e.bd, e.facts);
        CHECK(fac.gamma.order() == 3);
        CHECK(fac.gamma.contains(e.bd->group, {1, 1}));
        CHECK(regrouping(fac) == std::set<std::set<std::string>>{
                                     {"D10", "D02", "D21"}, {"D20", "D01", "D12"}});
        CHECK(std::set<std::string>(fac.dropped.begin(), fac.dropped.end()) ==
              std::set<std::string>{"D11", "D22"});
        CHECK(fac.pg_Z == 4);  // 2m - 2 at m = 3
        REQUIRE(fac.degree.has_value());
        CHECK(*fac.degree == 6);
        CHECK(fac.hint == CaseHint::CaseA);
        CHECK(verify_fundamental(fac.quotient_bd).empty());
    }

    SUBCASE("single contributing character: the covering map itself") {
        const auto& e = entry_by_id(entries, "ex-4.2-persson");
        FactorizationReport fac = factorization(*e.bd, e.facts);
        CHECK(fac.gamma.order() == 8);
        REQUIRE(fac.degree.has_value());
        CHECK(*fac.degree == 16);
        CHECK(fac.hint == CaseHint::CaseA);
        CHECK(fac.pg_Z == 3);
    }

    SUBCASE("degree 5: computed annihilator differs from the quoted generator") {
        const auto& e = entry_by_id(entries, "ex-4.9-d5-quintic");
        FactorizationReport fac = factorization(*e.bd, e.facts);
        CHECK(fac.gamma.contains(e.bd->group, {0, 1}));
        CHECK_FALSE(fac.gamma.contains(e.bd->group, {1, 0}));
        // all five lines survive into the quotient with one inertia image
        CHECK(regrouping(fac).size() == 1);
        CHECK(fac.pg_Z == 4);
        REQUIRE(fac.degree.has_value());
        CHECK(*fac.degree == 5);
        CHECK(fac.hint == CaseHint::CaseB);
        // adjoint class of the quotient quintic and its section count
        CHECK(simple_cyclic_adjunction(fac.quotient_bd) == DivisorClass({1}));
        long long sections = 0;
        for (long long a = 0; a <= 4; ++a)
            sections += h0(projective_plane(), DivisorClass({a - 3}));
        CHECK(sections == 4);
        CHECK(sections == fac.pg_Z);
    }

    SUBCASE("degree 3 complete intersection and degree 2 family") {
        const auto& ci = entry_by_id(entries, "ex-4.11-d3-ci33");
        FactorizationReport f1 = factorization(*ci.bd, ci.facts);
        CHECK(f1.gamma.contains(ci.bd->group, {0, 0, 1}));
        CHECK(f1.qmap.quotient.orders == std::vector<long long>{3, 3});
        CHECK(f1.pg_Z == 5);
        REQUIRE(f1.degree.has_value());
        CHECK(*f1.degree == 3);
        CHECK(f1.hint == CaseHint::CaseB);

        const auto& bin = entry_by_id(entries, "ex-4.12-d2-bin");
        FactorizationReport f2 = factorization(*bin.bd, bin.facts);
        CHECK(f2.gamma.order() == 2);
        CHECK(f2.qmap.quotient.orders == std::vector<long long>{2, 2});
        CHECK(f2.pg_Z == 11);
        REQUIRE(f2.degree.has_value());
        CHECK(*f2.degree == 2);
        CHECK(f2.hint == CaseHint::CaseB);
        CHECK(verify_fundamental(f2.quotient_bd).empty());
    }
}

TEST_CASE("quotient invariants are consistent across the catalog") {
    auto entries = shipped_catalog();
    for (const auto& e : entries) {
        if (!e.bd)
            continue;
        FactorizationReport fac = factorization(*e.bd, e.facts);
        CoverInvariants inv = invariants(*e.bd, false);
        CHECK(fac.pg_Z == inv.pg);
        if (fac.qmap.quotient.size() > 1) {
            CHECK(verify_fundamental(fac.quotient_bd).empty());
            // shipped parameter values all give integral quotient K^2
            CHECK(invariants(fac.quotient_bd, false).K2_rational.is_integer());
        }
        // contributing characters annihilate Gamma by construction
        CanonicalDecomposition dec = decompose(*e.bd);
        for (const auto& chi : dec.contributing)
            for (const auto& v : fac.gamma.elements)
                CHECK(pairing(e.bd->group, chi, v).is_zero());
    }
}

TEST_CASE("base locus of the canonical system") {
    auto entries = shipped_catalog();

    SUBCASE("fixed divisor and isolated points on the quadric example") {
        const auto& e = entry_by_id(entries, "ex-4.6-d6-quadric");
        CanonicalDecomposition dec = decompose(*e.bd);
        BaseLocusReport locus = base_locus(*e.bd, dec, e.facts);
        CHECK(locus.fixed_part ==
              std::map<std::string, long long>{{"D11", 2}, {"D22", 2}});
        REQUIRE(locus.isolated_point_count.has_value());
        CHECK(*locus.isolated_point_count == 12);  // 4m at m = 3

        // per-character tails: multiplicity m - 1 - r on each component
        const auto& row12 = locus.per_char.at({1, 2});
        CHECK(row12.at("D10") == 1);
        CHECK(row12.at("D20") == 0);
        CHECK(row12.at("D11") == 2);
        CHECK(row12.at("D21") == 1);
        const auto& row21 = locus.per_char.at({2, 1});
        CHECK(row21.at("D10") == 0);
        CHECK(row21.at("D20") == 1);
        CHECK(row21.at("D22") == 2);
    }

    SUBCASE("three contributing characters, no fixed part") {
        const auto& e = entry_by_id(entries, "ex-4.1-dp6");
        CanonicalDecomposition dec = decompose(*e.bd);
        BaseLocusReport locus = base_locus(*e.bd, dec, e.facts);
        CHECK(locus.fixed_part.empty());
        CHECK_FALSE(locus.isolated_point_count.has_value());
        // each character vanishes to order 1 exactly on its orthogonal component
        CHECK(locus.per_char.at({1, 0}).at("D01") == 1);
        CHECK(locus.per_char.at({1, 0}).at("D10") == 0);
        CHECK(locus.per_char.at({1, 0}).at("D11") == 0);
        CHECK(locus.per_char.at({1, 1}).at("D11") == 1);
        CHECK(locus.per_char.at({1, 1}).at("D10") == 0);
    }

    SUBCASE("single contributing character with maximal r-values") {
        const auto& e = entry_by_id(entries, "ex-4.2-persson");
        BaseLocusReport locus = base_locus(*e.bd, decompose(*e.bd), e.facts);
        CHECK(locus.fixed_part.empty());  // r = m - 1 = 1 on every component
    }

    SUBCASE("multiplicities stay within [0, m-1] and vanish at maximal r") {
        for (const auto& e : entries) {
            if (!e.bd)
                continue;
            BaseLocusReport locus = base_locus(*e.bd, decompose(*e.bd), e.facts);
            for (const auto& [chi, row] : locus.per_char)
                for (const auto& b : e.bd->branch) {
                    long long m = order_of(e.bd->group, b.v);
                    long long mult = row.at(b.label);
                    CHECK(mult >= 0);
                    CHECK(mult <= m - 1);
                }
            for (const auto& [label, mult] : locus.fixed_part) {
                for (const auto& b : e.bd->branch) {
                    if (b.label != label)
                        continue;
                    for (const auto& [chi, row] : locus.per_char)
                        CHECK(mult <= row.at(label));
                }
            }
        }
    }
}
