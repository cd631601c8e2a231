#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/tournament.hpp"

// Exact computation of the acyclic and directed-triangle-free disconnection
// by pruned exhaustive partition search, tightness decision, optimal
// partition enumeration, keenness verification, and the three-class set
// identities as checkable records.

namespace circulant {

enum class Variant {
    acyclic,        // external arcs must induce an acyclic digraph
    triangle_free,  // no directed triangle in three distinct classes
};

std::string_view variant_name(Variant v);

// Search bounds. Raising an order limit past the defaults can make runs
// very slow; allow_slow acknowledges that explicitly.
struct SearchLimits {
    int full_report_max_order = 13;     // full reports, enumeration, keenness
    int tight_decision_max_order = 21;  // decision-only searches
    bool allow_slow = false;
    std::size_t max_report_partitions = 200000;
    std::uint64_t default_seed = 42;
};

struct DisconnectionReport {
    Variant variant = Variant::triangle_free;
    int value = 0;  // the disconnection: maximum class count
    // Every optimal partition, canonically ordered; capped (with the flag
    // set) once max_report_partitions is reached. The histogram and the
    // total count always cover the full enumeration.
    std::vector<VertexPartition> optimal_partitions;
    bool partitions_capped = false;
    std::uint64_t optimal_count = 0;
    std::map<int, std::uint64_t> singular_histogram;
    std::uint64_t nodes = 0;
    double elapsed_seconds = 0.0;

    std::string to_json() const;
};

// Full reports; order bounded by full_report_max_order.
DisconnectionReport omega3(const CirculantTournament& t,
                           const SearchLimits& limits = {});
DisconnectionReport omega(const CirculantTournament& t,
                          const SearchLimits& limits = {});

// Value-only computation by iterative depth-k decision searches (valid
// because validity is monotone under class merging). omega3_value runs
// under the decision bound, omega_value under the (tighter) report bound.
int omega3_value(const CirculantTournament& t, const SearchLimits& limits = {});
int omega_value(const CirculantTournament& t, const SearchLimits& limits = {});

// Decision-only: no externally C3-free partition with three classes exists.
bool is_tight(const CirculantTournament& t, const SearchLimits& limits = {});

// Streams every optimal partition; return false from the callback to stop.
void for_each_optimal_partition(
    const CirculantTournament& t, Variant variant,
    const std::function<bool(const VertexPartition&)>& fn,
    const SearchLimits& limits = {});
std::vector<VertexPartition> enumerate_optimal_partitions(
    const CirculantTournament& t, Variant variant,
    const SearchLimits& limits = {});

struct KeennessDetail {
    bool keen = false;
    std::uint64_t optimal_count = 0;
    std::uint64_t with_one_singular = 0;
    int max_singular = 0;
};

// Keen: no optimal partition has two or more singular classes, and at
// least one optimal partition has exactly one.
KeennessDetail keenness_detail(const CirculantTournament& t, Variant variant,
                               const SearchLimits& limits = {});
bool keenness_check(const CirculantTournament& t, Variant variant,
                    const SearchLimits& limits = {});

// Every externally C3-free partition (any class count) has at most one
// singular class.
bool singular_bound_holds(const CirculantTournament& t,
                          const SearchLimits& limits = {});

// The three set identities over roles (A, B, C):
//   chain_empty:      (((((A+J) n B)+J) n C)+J) n A  =  empty
//   shift_identity:   (C n (A-J)) - J  =  (C-J) n (A-J-J)
//   complement_bound: (A+J) n B n (C-J)  within the complement of A-J-J
// Unconditionally, the left side of shift_identity is contained in the
// right side, and complement_bound implies chain_empty. The full package
// (all three, hence chain_empty <=> complement_bound) requires an
// externally C3-free partition with A its smallest class and B its
// largest; outside that role assignment each identity has counterexamples
// even on externally C3-free partitions.
struct ThreeClassIdentities {
    bool chain_empty = false;
    bool shift_identity = false;
    bool complement_bound = false;
};

ThreeClassIdentities three_class_identities(const ResidueSet& a,
                                            const ResidueSet& b,
                                            const ResidueSet& c,
                                            const SymbolSet& j);

// Roles taken from the partition's canonical class order.
ThreeClassIdentities lemma_identity_check(const SymbolSet& j,
                                          const VertexPartition& p);

}  // namespace circulant
