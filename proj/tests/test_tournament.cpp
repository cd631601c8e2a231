#include "circulant/tournament.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

#include "circulant/errors.hpp"
#include "oracles.hpp"

using namespace circulant;

TEST_CASE("symbol set validation") {
    CHECK(SymbolSet::cyclic(1).str() == "3:{1}");
    CHECK(SymbolSet::cyclic(4).str() == "9:{1,2,3,4}");
    CHECK(SymbolSet::cyclic(3).str() == "7:{1,2,3}");

    CHECK_THROWS_WITH_AS(SymbolSet(ResidueSet(9, {0, 1, 3, 4})),
                         doctest::Contains("must not contain 0"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(SymbolSet(ResidueSet(9, {1, 2, 3, 6})),
                         doctest::Contains("exactly one of"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(SymbolSet(ResidueSet(9, {1, 2, 3})),
                         doctest::Contains("exactly one of"),
                         std::invalid_argument);
    CHECK_THROWS_AS(SymbolSet(ResidueSet(8, {1, 2, 3})), std::invalid_argument);
}

TEST_CASE("symbol set parsing accepts both text forms") {
    CHECK(SymbolSet::parse("9:{1,3,4,7}") == SymbolSet::parse("9:1,3,4,7"));
    CHECK(SymbolSet::parse("9:{1,3,4,7}").str() == "9:{1,3,4,7}");
    CHECK_THROWS_AS(SymbolSet::parse("9:{1,2,3}"), ParseError);
    CHECK_THROWS_AS(SymbolSet::parse("bogus"), ParseError);
}

TEST_CASE("symbol set enumeration") {
    auto one = enumerate_symbol_sets(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0].str() == "3:{1}");
    CHECK(one[1].str() == "3:{2}");

    CHECK(enumerate_symbol_sets(3).size() == 8);
    auto four = enumerate_symbol_sets(4);
    CHECK(four.size() == 16);
    CHECK(four.front() == SymbolSet::cyclic(4));  // all-zero choice vector
    CHECK(four.back().str() == "9:{5,6,7,8}");    // all pairs flipped
}

TEST_CASE("tournament arcs") {
    CirculantTournament c3 = build(SymbolSet::cyclic(1));
    CHECK(c3.arc(0, 1));
    CHECK(c3.arc(1, 2));
    CHECK(c3.arc(2, 0));
    CHECK_FALSE(c3.arc(1, 0));

    CirculantTournament paley(SymbolSet::parse("7:{1,2,4}"));
    for (int v = 0; v < 7; ++v) {
        CHECK(detail::popcount(paley.out_mask(v)) == 3);
        CHECK(detail::popcount(paley.in_mask(v)) == 3);
    }
}

TEST_CASE("every symbol set builds a regular tournament") {
    for (int n : {1, 2, 3, 4}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            CirculantTournament t(s);
            int m = t.order();
            for (int v = 0; v < m; ++v)
                CHECK(detail::popcount(t.out_mask(v)) == n);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    if (i == j)
                        CHECK_FALSE(t.arc(i, j));
                    else
                        CHECK(t.arc(i, j) != t.arc(j, i));
                }
        });
    }
}

TEST_CASE("symbol set axioms: 0 outside J+J, complement is -J plus 0") {
    for (int n : {1, 2, 3, 4, 5}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            CHECK_FALSE(sumset(s.members(), s.members()).contains(0));
            CHECK(complement(s.members()) == negate(s.members()).with(0));
        });
    }
}

TEST_CASE("rotation is an automorphism") {
    for (const auto& s : enumerate_symbol_sets(3)) {
        CirculantTournament t(s);
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (i != j)
                    CHECK(t.arc(i, j) == t.arc((i + 1) % 7, (j + 1) % 7));
    }
}

TEST_CASE("multipliers map C(J) onto C(aJ)") {
    for (const auto& s : enumerate_symbol_sets(4)) {
        CirculantTournament t(s);
        int m = t.order();
        for (int a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            CirculantTournament image{SymbolSet(dilate(a, s.members()))};
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (i != j)
                        CHECK(t.arc(i, j) == image.arc(a * i % m, a * j % m));
        }
    }
}

TEST_CASE("directed triangles") {
    CirculantTournament c3(SymbolSet::cyclic(1));
    auto tri = directed_triangles(c3);
    REQUIRE(tri.size() == 1);
    CHECK(tri[0] == std::array<int, 3>{0, 1, 2});

    // Brute-force oracle count for the order-7 Paley tournament, frozen;
    // cross-checked by C(n,3) - n*C(d,2) for a regular tournament.
    CirculantTournament paley(SymbolSet::parse("7:{1,2,4}"));
    auto slow = oracles::slow_triangles(paley);
    CHECK(slow.size() == 14);
    CHECK(directed_triangles(paley).size() == slow.size());
    CHECK(35 - 7 * 3 == 14);
}

TEST_CASE("triangle enumeration matches the oracle and the count formula") {
    for (int n : {1, 2, 3, 4, 5}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            CirculantTournament t(s);
            auto fast = directed_triangles(t);
            auto slow = oracles::slow_triangles(t);
            CHECK(fast == slow);
            int m = t.order();
            long expected =
                static_cast<long>(m) * (m - 1) * (m - 2) / 6 -
                static_cast<long>(m) * n * (n - 1) / 2;
            CHECK(static_cast<long>(fast.size()) == expected);
            for (const auto& [u, v, w] : fast) {
                CHECK(u < v);
                CHECK(u < w);
            }
        });
    }
}

TEST_CASE("alspach property") {
    CHECK(alspach_check(CirculantTournament(SymbolSet::cyclic(1))));
    CHECK(alspach_check(CirculantTournament(SymbolSet::parse("9:{1,2,3,4}"))));
    CHECK(alspach_check(CirculantTournament(SymbolSet::parse("9:{1,3,4,7}"))));
}

TEST_CASE("vertex partition construction and canonical order") {
    VertexPartition p(9, {{3, 6}, {0}, {1, 2, 4, 5, 7, 8}});
    CHECK(p.class_count() == 3);
    CHECK(p.classes()[0] == std::vector<int>{0});  // sorted by min vertex
    CHECK(p.classes()[1] == std::vector<int>{1, 2, 4, 5, 7, 8});
    CHECK(p.class_of(7) == 1);
    CHECK(p.class_of(6) == 2);
    CHECK(p.singular_count() == 1);
    CHECK(p.str() == "{0}|{1,2,4,5,7,8}|{3,6}");
    // Parsing accepts classes in any order and canonicalizes.
    CHECK(VertexPartition::parse("{0}|{3,6}|{1,2,4,5,7,8}", 9) == p);

    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1, 2}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition::parse("{0}|{1,2}", 4), ParseError);
}

TEST_CASE("from_class_ids uses first-occurrence order") {
    VertexPartition p = VertexPartition::from_class_ids({5, 2, 5, 2, 7});
    CHECK(p.class_count() == 3);
    CHECK(p.classes()[0] == std::vector<int>{0, 2});
    CHECK(p.classes()[1] == std::vector<int>{1, 3});
    CHECK(p.classes()[2] == std::vector<int>{4});
}

TEST_CASE("singular counts") {
    CHECK(VertexPartition(3, {{0}, {1, 2}}).singular_count() == 1);
    CHECK(VertexPartition(5, {{0, 1}, {2, 3, 4}}).singular_count() == 0);
    VertexPartition all_singletons(5, {{0}, {1}, {2}, {3}, {4}});
    CHECK(all_singletons.singular_count() == 5);
}

TEST_CASE("external arcs") {
    CirculantTournament c3(SymbolSet::cyclic(1));
    CHECK(external_arcs(c3, VertexPartition(3, {{0, 1, 2}})).empty());

    auto all = external_arcs(c3, VertexPartition(3, {{0}, {1}, {2}}));
    CHECK(all.size() == 3);  // every arc of the 3-cycle

    auto some = external_arcs(c3, VertexPartition(3, {{0}, {1, 2}}));
    CHECK(some == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}});

    CHECK_THROWS_AS(external_arcs(c3, VertexPartition(5, {{0, 1, 2, 3, 4}})),
                    std::invalid_argument);
}

TEST_CASE("externally C3-free predicate") {
    CirculantTournament c3(SymbolSet::cyclic(1));
    CHECK(is_externally_c3_free(c3, VertexPartition(3, {{0}, {1, 2}})));
    CHECK_FALSE(is_externally_c3_free(c3, VertexPartition(3, {{0}, {1}, {2}})));

    CirculantTournament t(SymbolSet::parse("9:{1,3,4,7}"));
    VertexPartition good = VertexPartition::parse("{0}|{3,6}|{1,2,4,5,7,8}", 9);
    CHECK(oracles::slow_c3_free(t, good));
    CHECK(is_externally_c3_free(t, good));

    // The three mod-3 cosets are NOT externally C3-free here: 0 -> 1 -> 5 -> 0
    // is a rainbow triangle.
    VertexPartition cosets(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
    CHECK(t.arc(0, 1));
    CHECK(t.arc(1, 5));
    CHECK(t.arc(5, 0));
    CHECK_FALSE(oracles::slow_c3_free(t, cosets));
    CHECK_FALSE(is_externally_c3_free(t, cosets));
}

TEST_CASE("externally acyclic predicate") {
    CirculantTournament c3(SymbolSet::cyclic(1));
    CHECK(is_externally_acyclic(c3, VertexPartition(3, {{0, 1, 2}})));
    CHECK_FALSE(is_externally_acyclic(c3, VertexPartition(3, {{0}, {1}, {2}})));

    // Singleton-vs-rest is externally acyclic in any tournament: external
    // arcs all touch the singleton, and a cycle would need two of them in a
    // row somewhere else.
    for (const auto& s : enumerate_symbol_sets(3)) {
        CirculantTournament t(s);
        for (int v = 0; v < 7; ++v) {
            std::vector<int> rest;
            for (int u = 0; u < 7; ++u)
                if (u != v) rest.push_back(u);
            VertexPartition p(7, {{v}, rest});
            CHECK(is_externally_acyclic(t, p));
        }
    }
}

TEST_CASE("acyclic and C3-free predicates match the oracles") {
    std::mt19937_64 rng(8080);
    for (int n : {2, 3, 4, 5}) {
        int m = 2 * n + 1;
        auto sets = enumerate_symbol_sets(n);
        std::uniform_int_distribution<size_t> pick_set(0, sets.size() - 1);
        std::uniform_int_distribution<int> pick_classes(1, m);
        for (int trial = 0; trial < 120; ++trial) {
            CirculantTournament t(sets[pick_set(rng)]);
            int k = pick_classes(rng);
            std::vector<int> ids(static_cast<size_t>(m));
            std::uniform_int_distribution<int> pick_class(0, k - 1);
            for (auto& id : ids) id = pick_class(rng);
            VertexPartition p = VertexPartition::from_class_ids(ids);
            bool acyclic = is_externally_acyclic(t, p);
            CHECK(acyclic == oracles::slow_acyclic(t, p));
            CHECK(is_externally_c3_free(t, p) == oracles::slow_c3_free(t, p));
            if (acyclic) CHECK(is_externally_c3_free(t, p));
        }
    }
}

// Over all partitions at orders <= 7 (plus spot checks at 9), an externally
// C3-free partition of a regular tournament has at most one singular class.
TEST_CASE("at most one singular class in C3-free partitions") {
    for (int n : {1, 2, 3}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            CirculantTournament t(s);
            oracles::for_each_set_partition(t.order(), [&](const std::vector<int>& ids) {
                auto p = VertexPartition::from_class_ids(ids);
                if (p.singular_count() > 1) CHECK_FALSE(oracles::slow_c3_free(t, p));
            });
        });
    }
    // Sampled partitions above order 9.
    std::mt19937_64 rng(1123);
    for (const auto& s : enumerate_symbol_sets(5)) {
        CirculantTournament t(s);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<int> ids(11);
            std::uniform_int_distribution<int> pick(0, 4);
            for (auto& id : ids) id = pick(rng);
            auto p = VertexPartition::from_class_ids(ids);
            if (p.singular_count() > 1) CHECK_FALSE(is_externally_c3_free(t, p));
        }
    }
}
