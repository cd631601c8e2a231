#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/tournament.hpp"

// Lexicographic composition of circulant tournaments, inverse decomposition
// via quasi-periodic witnesses, full factorization into simple factors, and
// an independent module-based cross-check oracle.

namespace circulant {

// Symbol set of C(J)[C(K)] on (2m+1)(2n+1) vertices:
// L = (2m+1)K u (J + (2m+1)[1, 2n+1]), arithmetic mod (2m+1)(2n+1).
SymbolSet compose(const SymbolSet& outer, const SymbolSet& inner);

// Arc-exact check that C(whole) equals the lexicographic product
// C(outer)[C(inner)] under the coordinate bijection sending residue x to
// (base = x mod (2m+1), copy position = x div (2m+1)); the copies of the
// inner factor sit on the residue classes mod 2m+1.
bool verify_composition(const SymbolSet& outer, const SymbolSet& inner,
                        const SymbolSet& whole);

struct Decomposition {
    SymbolSet outer;  // J, mod 2m+1
    SymbolSet inner;  // K, mod 2n+1
    Subgroup subgroup;  // order 2n+1, the copies' carrier
};

// Inverts compose using the quasi-periodic witness with maximal subgroup
// order: J collects one representative per full coset (reduced mod 2m+1),
// K is the residual part divided by 2m+1. Nullopt when the symbol set has
// no witness. Guarantees compose(outer, inner) == input.
std::optional<Decomposition> decompose(const SymbolSet& whole);

// Nested simple factors: a leaf (no children) is simple; an internal node
// carries exactly two children whose recomposition reproduces the node.
struct FactorizationTree {
    SymbolSet node;
    std::vector<FactorizationTree> children;  // empty or {outer, inner}

    bool is_leaf() const { return children.empty(); }
};

FactorizationTree factorize(const SymbolSet& s);

// Recomposes the tree bottom-up; equals the root's symbol set.
SymbolSet recompose(const FactorizationTree& t);

// "(9:{1,3,4,7} (3:{1}) (3:{1}))"; a tree that is a single leaf prints bare.
std::string to_sexpr(const FactorizationTree& t);
FactorizationTree parse_sexpr(std::string_view text);

// True iff the symbol set admits no quasi-periodic witness. Always also
// evaluates the algebraic route (arithmetic progressions are simple;
// otherwise simple iff |J+J| = 2|J|) and throws std::logic_error if the
// two routes disagree.
bool is_simple(const SymbolSet& s);

// Some module (homogeneous set) M with 2 <= |M| <= order-1: every outside
// vertex either dominates all of M or is dominated by all of M. Exhaustive
// over subsets up to order <= 15, seeded random sampling above.
std::optional<std::vector<int>> find_module(const CirculantTournament& t,
                                            std::uint64_t seed = 0,
                                            std::uint64_t samples = 200000);

}  // namespace circulant
