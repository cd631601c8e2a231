#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circulant/residue_set.hpp"

// Circulant tournament construction, triangle machinery, and the partition
// predicates (externally C3-free, externally acyclic).

namespace circulant {

// A validated dominance pattern J over Z_{2n+1}: 0 is excluded, |J| = n,
// and exactly one of {j, -j} is present for every pair.
class SymbolSet {
public:
    // Throws std::invalid_argument naming the violated invariant.
    explicit SymbolSet(ResidueSet members);

    // {1..n} mod 2n+1, the cyclic tournament's symbol set.
    static SymbolSet cyclic(int n);

    // Accepts "m:{j1,...,jn}" or "m:j1,...,jn".
    static SymbolSet parse(std::string_view text);

    int half_size() const { return (members_.modulus() - 1) / 2; }
    int modulus() const { return members_.modulus(); }
    const ResidueSet& members() const { return members_; }
    bool contains(int j) const { return members_.contains(j); }

    bool operator==(const SymbolSet& other) const = default;

    // Canonical text, braced: "9:{1,3,4,7}".
    std::string str() const { return members_.str(); }

private:
    ResidueSet members_;
};

// All 2^n symbol sets mod 2n+1, one binary choice per pair {j, 2n+1-j}
// for j = 1..n, in lexicographic order of the choice vector (0 = keep j).
void for_each_symbol_set(int n, const std::function<void(const SymbolSet&)>& fn);
std::vector<SymbolSet> enumerate_symbol_sets(int n);

// Tournament on Z_{2n+1} with arc (i,j) iff j-i is a symbol. Adjacency is
// evaluated from the symbol bit mask; per-vertex neighbor masks are
// precomputed once.
class CirculantTournament {
public:
    explicit CirculantTournament(SymbolSet symbol);

    int order() const { return order_; }
    int out_degree() const { return symbol_.half_size(); }
    const SymbolSet& symbol() const { return symbol_; }

    bool arc(int from, int to) const {
        int d = to - from;
        return symbol_.contains(d < 0 ? d + order_ : d);
    }
    detail::u128 out_mask(int v) const { return out_[v]; }
    detail::u128 in_mask(int v) const { return in_[v]; }

private:
    SymbolSet symbol_;
    int order_;
    std::vector<detail::u128> out_;
    std::vector<detail::u128> in_;
};

inline CirculantTournament build(const SymbolSet& symbol) {
    return CirculantTournament(symbol);
}

// Ordered disjoint nonempty vertex classes covering {0..order-1},
// canonically sorted by minimum vertex.
class VertexPartition {
public:
    // Validates disjointness, coverage and nonemptiness; canonicalizes.
    VertexPartition(int order, std::vector<std::vector<int>> classes);

    // From a class label per vertex (labels arbitrary, all vertices present).
    static VertexPartition from_class_ids(const std::vector<int>& ids);

    // Parses "{0}|{3,6}|{1,2,4,5,7,8}".
    static VertexPartition parse(std::string_view text, int order);

    int order() const { return order_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int v) const { return class_of_[v]; }
    int singular_count() const;

    bool operator==(const VertexPartition& other) const {
        return order_ == other.order_ && classes_ == other.classes_;
    }

    std::string str() const;

private:
    int order_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

int singular_count(const VertexPartition& p);

// Directed 3-cycles u->v->w->u, each reported once with u the minimum vertex.
void for_each_directed_triangle(
    const CirculantTournament& t,
    const std::function<void(int, int, int)>& fn);
std::vector<std::array<int, 3>> directed_triangles(const CirculantTournament& t);

// Every arc lies in a directed triangle.
bool alspach_check(const CirculantTournament& t);

// Arcs whose endpoints lie in distinct classes.
std::vector<std::pair<int, int>> external_arcs(const CirculantTournament& t,
                                               const VertexPartition& p);

// No directed triangle has its vertices in three pairwise distinct classes.
bool is_externally_c3_free(const CirculantTournament& t,
                           const VertexPartition& p);

// The subdigraph of external arcs has no directed cycle.
bool is_externally_acyclic(const CirculantTournament& t,
                           const VertexPartition& p);

}  // namespace circulant
