#include "circulant/composition.hpp"

#include <doctest.h>

#include "circulant/errors.hpp"
#include "oracles.hpp"

using namespace circulant;

TEST_CASE("compose formula") {
    // (2m+1)K u (J + (2m+1)[1,2n+1]) worked out by hand:
    // 3*{1} = {3}, {1}+{0,3,6} = {1,4,7}.
    CHECK(compose(SymbolSet::parse("3:{1}"), SymbolSet::parse("3:{1}")).str() ==
          "9:{1,3,4,7}");
    CHECK(compose(SymbolSet::parse("3:{1}"), SymbolSet::parse("5:{1,2}")).str() ==
          "15:{1,3,4,6,7,10,13}");
    CHECK(compose(SymbolSet::parse("3:{2}"), SymbolSet::parse("3:{1}")).str() ==
          "9:{2,3,5,8}");
}

TEST_CASE("compose half-size arithmetic") {
    for (auto [hm, hn] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}}) {
        for (const auto& j : enumerate_symbol_sets(hm))
            for (const auto& k : enumerate_symbol_sets(hn)) {
                SymbolSet l = compose(j, k);
                CHECK(l.half_size() == hm * (2 * hn + 1) + hn);
                CHECK(l.modulus() == (2 * hm + 1) * (2 * hn + 1));
            }
    }
}

TEST_CASE("compose is associative on symbol sets") {
    for (const auto& a : enumerate_symbol_sets(1))
        for (const auto& b : enumerate_symbol_sets(2))
            for (const auto& c : enumerate_symbol_sets(1))
                CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("verify_composition compares full arc sets") {
    SymbolSet j = SymbolSet::parse("3:{1}");
    CHECK(verify_composition(j, j, SymbolSet::parse("9:{1,3,4,7}")));
    CHECK_FALSE(verify_composition(j, j, SymbolSet::parse("9:{1,2,3,4}")));
    SymbolSet a = SymbolSet::parse("3:{2}");
    CHECK(verify_composition(a, j, compose(a, j)));
    CHECK_THROWS_AS(verify_composition(j, j, SymbolSet::parse("15:{1,3,4,6,7,10,13}")),
                    std::invalid_argument);
}

TEST_CASE("decompose inverts compose") {
    auto d = decompose(SymbolSet::parse("9:{1,3,4,7}"));
    REQUIRE(d.has_value());
    CHECK(d->outer.str() == "3:{1}");
    CHECK(d->inner.str() == "3:{1}");
    CHECK(d->subgroup.members() == ResidueSet(9, {0, 3, 6}));

    CHECK_FALSE(decompose(SymbolSet::parse("9:{1,2,3,4}")).has_value());

    d = decompose(SymbolSet::parse("15:{1,3,4,6,7,10,13}"));
    REQUIRE(d.has_value());
    CHECK(d->outer.str() == "3:{1}");
    CHECK(d->inner.str() == "5:{1,2}");
    CHECK(d->subgroup.order() == 5);
}

TEST_CASE("round trip at all small factor shapes") {
    for (auto [hm, hn] : {std::pair{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}) {
        for (const auto& j : enumerate_symbol_sets(hm))
            for (const auto& k : enumerate_symbol_sets(hn)) {
                SymbolSet l = compose(j, k);
                auto d = decompose(l);
                REQUIRE(d.has_value());
                CHECK(compose(d->outer, d->inner) == l);
                CHECK(verify_composition(d->outer, d->inner, l));
            }
    }
}

TEST_CASE("factorize") {
    FactorizationTree t = factorize(SymbolSet::parse("9:{1,3,4,7}"));
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].is_leaf());
    CHECK(t.children[1].is_leaf());
    CHECK(t.children[0].node.str() == "3:{1}");
    CHECK(t.children[1].node.str() == "3:{1}");

    CHECK(factorize(SymbolSet::parse("7:{1,2,4}")).is_leaf());
    CHECK(factorize(SymbolSet::parse("9:{1,2,3,4}")).is_leaf());
}

TEST_CASE("factorization trees recompose and have simple leaves") {
    auto check_tree = [](const FactorizationTree& t, const SymbolSet& root) {
        CHECK(recompose(t) == root);
        int leaf_product = 1;
        std::function<void(const FactorizationTree&)> walk =
            [&](const FactorizationTree& node) {
                if (node.is_leaf()) {
                    leaf_product *= node.node.modulus();
                    CHECK(is_simple(node.node));
                    CHECK_FALSE(quasi_periodic_witness(node.node.members()));
                } else {
                    REQUIRE(node.children.size() == 2);
                    CHECK(compose(node.children[0].node, node.children[1].node) ==
                          node.node);
                    walk(node.children[0]);
                    walk(node.children[1]);
                }
            };
        walk(t);
        CHECK(leaf_product == root.modulus());
    };

    for (const auto& j : enumerate_symbol_sets(1))
        for (const auto& k : enumerate_symbol_sets(2)) {
            check_tree(factorize(compose(j, k)), compose(j, k));
            check_tree(factorize(compose(k, j)), compose(k, j));
        }
    // Nested: 27 = 3*(3*3) and (3*3)*3.
    SymbolSet inner = compose(SymbolSet::parse("3:{1}"), SymbolSet::parse("3:{2}"));
    SymbolSet left = compose(inner, SymbolSet::parse("3:{1}"));
    SymbolSet right = compose(SymbolSet::parse("3:{1}"), inner);
    check_tree(factorize(left), left);
    check_tree(factorize(right), right);
}

TEST_CASE("s-expression serialization") {
    CHECK(to_sexpr(factorize(SymbolSet::parse("7:{1,2,4}"))) == "7:{1,2,4}");
    FactorizationTree t = factorize(SymbolSet::parse("9:{1,3,4,7}"));
    CHECK(to_sexpr(t) == "(9:{1,3,4,7} (3:{1}) (3:{1}))");

    SymbolSet nested = compose(SymbolSet::parse("3:{1}"),
                               compose(SymbolSet::parse("3:{1}"), SymbolSet::parse("3:{1}")));
    std::string text = to_sexpr(factorize(nested));
    FactorizationTree parsed = parse_sexpr(text);
    CHECK(to_sexpr(parsed) == text);
    CHECK(recompose(parsed) == nested);

    CHECK(parse_sexpr("7:{1,2,4}").is_leaf());
    CHECK_THROWS_AS(parse_sexpr("(9:{1,3,4,7} (3:{1}))"), ParseError);
    CHECK_THROWS_AS(parse_sexpr("(9:{1,3,4,7}"), ParseError);
    CHECK_THROWS_AS(parse_sexpr(""), ParseError);
}

TEST_CASE("simplicity") {
    CHECK(is_simple(SymbolSet::parse("9:{1,2,3,4}")));
    CHECK_FALSE(is_simple(SymbolSet::parse("9:{1,3,4,7}")));
    // Prime order: no nontrivial subgroup, always simple. The dual-route
    // cross-check inside is_simple must never fire.
    for (int n : {1, 2, 3, 5, 6}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            CHECK(is_simple(s));
        });
    }
    for_each_symbol_set(4, [&](const SymbolSet& s) {
        CHECK(is_simple(s) == !quasi_periodic_witness(s.members()).has_value());
    });
}

TEST_CASE("sumset size dichotomy for non-AP symbol sets") {
    // At orders 9 and 15 the biconditional holds: every inner factor is an
    // order-3 or order-5 symbol set, whose own sumset is always critical.
    for (int n : {4, 7}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            int size = sumset(s.members(), s.members()).size();
            CHECK(2 * n - 1 <= size);
            CHECK(size <= 2 * n);
            if (!is_arithmetic_progression(s.members()))
                CHECK((size == 2 * n - 1) ==
                      quasi_periodic_witness(s.members()).has_value());
        });
    }
}

TEST_CASE("a quasi-periodic set can have a full sumset") {
    // Smallest case: outer 3:{1}, inner the order-7 Paley set, which is
    // simple and not an AP, so its sumset misses only 0. Only the
    // critical-sumset-implies-quasi-periodic direction is true in general.
    SymbolSet l = compose(SymbolSet::parse("3:{1}"), SymbolSet::parse("7:{1,2,4}"));
    CHECK(l.str() == "21:{1,3,4,6,7,10,12,13,16,19}");
    CHECK(quasi_periodic_witness(l.members()).has_value());
    CHECK_FALSE(is_arithmetic_progression(l.members()));
    CHECK(sumset(l.members(), l.members()).size() == 2 * l.half_size());
    CHECK_FALSE(is_simple(l));  // the one-directional cross-check stays quiet
}

TEST_CASE("AP and quasi-periodic symbol sets have structured J+J") {
    for (int n : {2, 3, 4, 7}) {
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            ResidueSet jj = sumset(s.members(), s.members());
            if (is_arithmetic_progression(s.members()))
                CHECK(is_arithmetic_progression(jj));
            if (is_quasi_periodic(s.members())) CHECK(is_quasi_periodic(jj));
        });
    }
}

TEST_CASE("find_module") {
    CirculantTournament composite(SymbolSet::parse("9:{1,3,4,7}"));
    auto m = find_module(composite);
    REQUIRE(m.has_value());
    // Any returned module must be uniform from outside.
    for (int v = 0; v < 9; ++v) {
        if (std::find(m->begin(), m->end(), v) != m->end()) continue;
        int dominated = 0;
        for (int u : *m) dominated += composite.arc(v, u) ? 1 : 0;
        CHECK((dominated == 0 || dominated == static_cast<int>(m->size())));
    }
    // The inner copy {0,3,6} is itself a module.
    for (int v : {1, 2, 4, 5, 7, 8}) {
        int dominated = 0;
        for (int u : {0, 3, 6}) dominated += composite.arc(v, u) ? 1 : 0;
        CHECK((dominated == 0 || dominated == 3));
    }

    CHECK_FALSE(find_module(CirculantTournament(SymbolSet::parse("7:{1,2,4}"))));
    CHECK_FALSE(find_module(CirculantTournament(SymbolSet::cyclic(1))));
}

TEST_CASE("composite symbol sets yield modules") {
    for (const auto& j : enumerate_symbol_sets(1))
        for (const auto& k : enumerate_symbol_sets(2)) {
            for (const auto& l : {compose(j, k), compose(k, j)}) {
                REQUIRE(decompose(l).has_value());
                CHECK(find_module(CirculantTournament(l)).has_value());
            }
        }
}
