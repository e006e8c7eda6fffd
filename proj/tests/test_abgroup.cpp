#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "abelcover/group.hpp"

using namespace abelcover;

namespace {

std::vector<GroupSpec> small_groups() {
    return {GroupSpec({2}),    GroupSpec({6}),       GroupSpec({3, 3}),
            GroupSpec({5, 5}), GroupSpec({2, 2, 2}), GroupSpec({2, 2, 2, 2}),
            GroupSpec({6, 2}), GroupSpec({4, 2}),    GroupSpec({3, 3, 3}),
            GroupSpec({25, 5}), GroupSpec({5, 5, 5, 5})};
}

// subgroups of g generated by up to max_gens elements, deduplicated
std::vector<Subgroup> all_subgroups(const GroupSpec& g, int max_gens) {
    std::map<std::vector<long long>, Subgroup> seen;
    auto key = [&](const Subgroup& h) {
        std::vector<long long> k;
        for (const auto& e : h.elements)
            k.push_back(g.index_of(e));
        return k;
    };
    Subgroup trivial = span(g, {});
    seen[key(trivial)] = trivial;
    std::vector<std::vector<Tuple>> frontier = {{}};
    for (int depth = 0; depth < max_gens; ++depth) {
        std::vector<std::vector<Tuple>> next;
        for (const auto& gens : frontier)
            for (long long idx = 1; idx < g.size(); ++idx) {
                auto more = gens;
                more.push_back(g.element(idx));
                Subgroup h = span(g, more);
                if (seen.emplace(key(h), h).second)
                    next.push_back(more);
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (auto& [k, h] : seen)
        out.push_back(h);
    return out;
}

}  // namespace

TEST_CASE("element orders") {
    CHECK(order_of(GroupSpec({3, 3}), {1, 2}) == 3);
    CHECK(order_of(GroupSpec({2, 2, 2, 2}), {1, 1, 0, 0}) == 2);
    CHECK(order_of(GroupSpec({6, 2}), {2, 1}) == 6);
    CHECK(order_of(GroupSpec({4, 2}), {2, 0}) == 2);
}

TEST_CASE("r-values") {
    CHECK(r_value(GroupSpec({5, 5}), {4, 0}, {1, 3}) == 4);
    CHECK(r_value(GroupSpec({3, 3}), {1, 2}, {1, 1}) == 0);
    CHECK(r_value(GroupSpec({6, 2}), {0, 0}, {1, 1}) == 0);
    CHECK_THROWS_AS(r_value(GroupSpec({3, 3}), {1, 0}, {0, 0}), InputError);
}

TEST_CASE("epsilon coefficients") {
    CHECK(epsilon(GroupSpec({2}), {1}, {1}, {1}) == 1);
    CHECK(epsilon(GroupSpec({3, 3}), {1, 0}, {1, 0}, {1, 0}) == 0);
    CHECK(epsilon(GroupSpec({5, 5}), {4, 0}, {3, 0}, {1, 0}) == 1);
}

TEST_CASE("r-value addition law is the scalar fundamental relation") {
    for (const auto& g : small_groups()) {
        if (g.size() > 125)
            continue;  // cubic loop; the 625-element group is covered by the encoding test
        for (long long i = 0; i < g.size(); ++i)
            for (long long j = 0; j < g.size(); ++j)
                for (long long k = 1; k < g.size(); ++k) {
                    Tuple chi = g.element(i), chi2 = g.element(j), v = g.element(k);
                    CHECK(r_value(g, chi, v) + r_value(g, chi2, v) ==
                          r_value(g, g.add(chi, chi2), v) +
                              epsilon(g, chi, chi2, v) * order_of(g, v));
                }
    }
}

TEST_CASE("inertia encoding is injective: v determines (subgroup, character)") {
    for (const auto& g : small_groups()) {
        REQUIRE(g.size() <= 625);
        // psi_v is stored as the map x -> k mod ord(v) with x = k v
        std::set<std::pair<std::vector<long long>, std::vector<long long>>> seen;
        for (long long idx = 1; idx < g.size(); ++idx) {
            Tuple v = g.element(idx);
            long long m = order_of(g, v);
            std::map<long long, long long> psi;
            Tuple x = g.zero();
            for (long long k = 0; k < m; ++k) {
                psi[g.index_of(x)] = k;
                x = g.add(x, v);
            }
            std::vector<long long> subgroup_key, psi_key;
            for (const auto& [xi, k] : psi) {
                subgroup_key.push_back(xi);
                psi_key.push_back(k);
            }
            CHECK(seen.emplace(subgroup_key, psi_key).second);
        }
    }
}

TEST_CASE("annihilators of character sets") {
    GroupSpec g({3, 3});
    Subgroup gamma = annihilator(g, {{1, 1}, {2, 2}});
    CHECK(gamma.order() == 3);
    CHECK(gamma.contains(g, {1, 2}));

    Subgroup gamma2 = annihilator(g, {{1, 2}, {2, 1}});
    CHECK(gamma2.order() == 3);
    CHECK(gamma2.contains(g, {1, 1}));

    std::vector<Tuple> all_chars;
    for (long long i = 0; i < g.size(); ++i)
        all_chars.push_back(g.element(i));
    CHECK(annihilator(g, all_chars).order() == 1);

    CHECK(annihilator(g, {}).order() == 9);
}

TEST_CASE("perp of annihilator recovers the generated character subgroup") {
    for (const auto& g : small_groups()) {
        if (g.size() > 27)
            continue;
        for (long long i = 0; i < g.size(); ++i)
            for (long long j = i; j < g.size(); ++j) {
                std::vector<Tuple> chars = {g.element(i), g.element(j)};
                auto back = perp(g, annihilator(g, chars));
                Subgroup generated = span(g, chars);  // dual group has the same orders
                std::set<Tuple> lhs(back.begin(), back.end());
                std::set<Tuple> rhs(generated.elements.begin(), generated.elements.end());
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("quotient by a coordinate subgroup") {
    GroupSpec g({5, 5});
    QuotientMap qm = quotient(g, span(g, {{0, 1}}));
    REQUIRE(qm.quotient.orders == std::vector<long long>{5});
    Tuple first = qm.project({1, 0});
    CHECK_FALSE(qm.quotient.is_zero(first));
    CHECK(order_of(qm.quotient, first) == 5);
    for (long long b = 1; b < 5; ++b)
        CHECK(qm.project({1, b}) == first);  // all five branch elements merge
}

TEST_CASE("quotient of Z3^2 by the diagonal") {
    GroupSpec g({3, 3});
    QuotientMap qm = quotient(g, span(g, {{1, 1}}));
    REQUIRE(qm.quotient.orders == std::vector<long long>{3});
    CHECK(qm.project({1, 0}) == qm.project({0, 2}));
    CHECK(qm.project({1, 0}) == qm.project({2, 1}));
    CHECK(qm.project({2, 0}) == qm.project({0, 1}));
    CHECK(qm.project({1, 0}) != qm.project({2, 0}));
    CHECK(qm.quotient.is_zero(qm.project({2, 2})));
}

TEST_CASE("quotient by the full group is trivial") {
    GroupSpec g({3, 3});
    std::vector<Tuple> all;
    for (long long i = 1; i < g.size(); ++i)
        all.push_back(g.element(i));
    QuotientMap qm = quotient(g, span(g, all));
    CHECK(qm.quotient.size() == 1);
    CHECK(qm.quotient.is_zero(qm.project({1, 2})));
}

TEST_CASE("embedded quotient characters restrict correctly") {
    for (const auto& g : {GroupSpec({3, 3}), GroupSpec({4, 2}), GroupSpec({2, 2, 2})}) {
        for (const auto& gamma : all_subgroups(g, 2)) {
            QuotientMap qm = quotient(g, gamma);
            for (long long ci = 0; ci < qm.quotient.size(); ++ci) {
                Tuple chi_bar = qm.quotient.element(ci);
                Tuple chi = qm.embed_character(chi_bar);
                for (long long vi = 0; vi < g.size(); ++vi) {
                    Tuple v = g.element(vi);
                    CHECK(pairing(g, chi, v) ==
                          pairing(qm.quotient, chi_bar, qm.project(v)));
                }
            }
            // the embedded characters are exactly the perp of gamma
            std::set<Tuple> embedded;
            for (long long ci = 0; ci < qm.quotient.size(); ++ci)
                embedded.insert(qm.embed_character(qm.quotient.element(ci)));
            auto p = perp(g, gamma);
            CHECK(embedded == std::set<Tuple>(p.begin(), p.end()));
        }
    }
}

TEST_CASE("quotients compose along subgroup chains") {
    for (const auto& g : {GroupSpec({3, 3}), GroupSpec({5, 5}), GroupSpec({2, 2, 2})}) {
        auto subgroups = all_subgroups(g, 3);
        for (const auto& g1 : subgroups)
            for (const auto& g2 : subgroups) {
                bool chain = true;
                for (const auto& e : g1.elements)
                    if (!g2.contains(g, e))
                        chain = false;
                if (!chain)
                    continue;
                QuotientMap q2 = quotient(g, g2);
                QuotientMap q1 = quotient(g, g1);
                // push g2 into G/g1 and quotient again
                std::vector<Tuple> images;
                for (const auto& e : g2.elements)
                    images.push_back(q1.project(e));
                QuotientMap qstep = quotient(q1.quotient, span(q1.quotient, images));
                // canonical forms agree
                CHECK(qstep.quotient.orders == q2.quotient.orders);
                // the branch-datum maps commute: fibers of the two projections agree
                for (long long i = 0; i < g.size(); ++i)
                    for (long long j = 0; j < g.size(); ++j) {
                        Tuple a = g.element(i), b = g.element(j);
                        bool direct = q2.project(a) == q2.project(b);
                        bool stepped =
                            qstep.project(q1.project(a)) == qstep.project(q1.project(b));
                        CHECK(direct == stepped);
                    }
            }
    }
}

TEST_CASE("group spec validation") {
    CHECK_THROWS_AS(GroupSpec({1, 3}), InputError);
    CHECK_THROWS_AS(GroupSpec({0}), InputError);
    GroupSpec g({4, 2});
    CHECK(g.size() == 8);
    CHECK(g.exponent() == 4);
    CHECK(g.reduce({5, 3}) == Tuple{1, 1});
    CHECK(g.element(g.index_of({3, 1})) == Tuple{3, 1});
}
