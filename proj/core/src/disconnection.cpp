#include "circulant/disconnection.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "circulant/errors.hpp"

namespace circulant {

using detail::u128;

std::string_view variant_name(Variant v) {
    return v == Variant::acyclic ? "acyclic" : "triangle_free";
}

namespace {

void check_bound(int order, int limit, bool allow_slow, const char* what) {
    if (order > limit && !allow_slow)
        throw BoundsError("order " + std::to_string(order) + " exceeds the " +
                          what + " bound " + std::to_string(limit) +
                          " (set allow_slow to override)");
}

// Canonical backtracking over set partitions: vertices are assigned in
// index order and vertex v may only open class (current count), so every
// unordered partition is visited exactly once, classes ordered by first
// occurrence (= by minimum vertex). The variant predicate is maintained
// incrementally: a violation created by assigning v always involves v, so
// partial states that fail are cut and never recur.
class PartitionSearch {
public:
    PartitionSearch(const CirculantTournament& t, Variant variant)
        : t_(t),
          n_(t.order()),
          variant_(variant),
          cls_(static_cast<size_t>(n_), -1),
          class_bits_(static_cast<size_t>(n_) + 1, 0) {}

    // Is there a valid partition with exactly k classes?
    bool decide(int k) {
        mode_ = Mode::decide;
        target_ = k;
        max_classes_ = k;
        stop_ = false;
        found_ = false;
        dive(0);
        return found_;
    }

    // Streams class-id vectors of every valid partition with exactly k
    // classes; callback returns false to stop early.
    void enumerate(int k, const std::function<bool(const std::vector<int>&)>& emit) {
        mode_ = Mode::exact;
        target_ = k;
        max_classes_ = k;
        stop_ = false;
        emit_ = &emit;
        dive(0);
    }

    // Streams every valid partition, any class count.
    void enumerate_all(const std::function<bool(const std::vector<int>&)>& emit) {
        mode_ = Mode::all;
        target_ = 0;
        max_classes_ = n_;
        stop_ = false;
        emit_ = &emit;
        dive(0);
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    enum class Mode { decide, exact, all };

    bool triangle_free_ok(int v, int c) const {
        u128 other = assigned_ & ~class_bits_[static_cast<size_t>(c)];
        u128 xs = t_.out_mask(v) & other;
        while (xs) {
            int x = detail::countr_zero(xs);
            xs &= xs - 1;
            u128 ys = t_.out_mask(x) & t_.in_mask(v) & other &
                      ~class_bits_[static_cast<size_t>(cls_[static_cast<size_t>(x)])];
            if (ys != 0) return false;
        }
        return true;
    }

    bool acyclic_ok(int v, int c) const {
        // Any new external cycle passes through v: walk external arcs
        // forward from v and reject if the walk returns.
        u128 start = t_.out_mask(v) & assigned_ & ~class_bits_[static_cast<size_t>(c)];
        u128 reach = start, pending = start;
        while (pending) {
            int u = detail::countr_zero(pending);
            pending &= pending - 1;
            u128 nxt = t_.out_mask(u) & assigned_ &
                       ~class_bits_[static_cast<size_t>(cls_[static_cast<size_t>(u)])];
            if (detail::test_bit(nxt, v)) return false;
            u128 fresh = nxt & ~reach;
            reach |= fresh;
            pending |= fresh;
        }
        return true;
    }

    void complete() {
        switch (mode_) {
            case Mode::decide:
                if (classes_used_ == target_) {
                    found_ = true;
                    stop_ = true;
                }
                break;
            case Mode::exact:
                if (classes_used_ == target_ && !(*emit_)(cls_)) stop_ = true;
                break;
            case Mode::all:
                if (!(*emit_)(cls_)) stop_ = true;
                break;
        }
    }

    void dive(int v) {
        if (stop_) return;
        if (v == n_) {
            complete();
            return;
        }
        int lo = 0;
        int hi = std::min(classes_used_, max_classes_ - 1);
        if (mode_ != Mode::all) {
            int potential = classes_used_ + (n_ - v);
            if (potential < target_) return;
            // Just enough vertices left: each must open a new class.
            if (potential == target_) lo = classes_used_;
        }
        for (int c = lo; c <= hi && !stop_; ++c) {
            ++nodes_;
            u128 bit = u128{1} << v;
            cls_[static_cast<size_t>(v)] = c;
            class_bits_[static_cast<size_t>(c)] |= bit;
            assigned_ |= bit;
            if (c == classes_used_) ++classes_used_;
            bool ok = variant_ == Variant::triangle_free ? triangle_free_ok(v, c)
                                                         : acyclic_ok(v, c);
            if (ok) dive(v + 1);
            if (c == classes_used_ - 1 &&
                (class_bits_[static_cast<size_t>(c)] & ~bit) == 0)
                --classes_used_;
            assigned_ &= ~bit;
            class_bits_[static_cast<size_t>(c)] &= ~bit;
            cls_[static_cast<size_t>(v)] = -1;
        }
    }

    const CirculantTournament& t_;
    int n_;
    Variant variant_;
    std::vector<int> cls_;
    std::vector<u128> class_bits_;
    u128 assigned_ = 0;
    int classes_used_ = 0;
    std::uint64_t nodes_ = 0;

    Mode mode_ = Mode::decide;
    int target_ = 0;
    int max_classes_ = 0;
    bool found_ = false;
    bool stop_ = false;
    const std::function<bool(const std::vector<int>&)>* emit_ = nullptr;
};

int value_by_decisions(const CirculantTournament& t, Variant variant,
                       std::uint64_t* nodes_out) {
    // Valid k-class partitions merge down to valid (k-1)-class ones, so the
    // first failing k ends the climb. Two classes always work: {v} | rest
    // has no rainbow triangle and no external cycle through one vertex.
    int value = std::min(2, t.order());
    std::uint64_t nodes = 0;
    for (int k = 3; k <= t.order(); ++k) {
        PartitionSearch search(t, variant);
        bool ok = search.decide(k);
        nodes += search.nodes();
        if (!ok) break;
        value = k;
    }
    if (nodes_out) *nodes_out = nodes;
    return value;
}

DisconnectionReport full_report(const CirculantTournament& t, Variant variant,
                                const SearchLimits& limits) {
    check_bound(t.order(), limits.full_report_max_order, limits.allow_slow,
                "full-report order");
    auto t0 = std::chrono::steady_clock::now();
    DisconnectionReport report;
    report.variant = variant;
    std::uint64_t decision_nodes = 0;
    report.value = value_by_decisions(t, variant, &decision_nodes);

    PartitionSearch search(t, variant);
    search.enumerate(report.value, [&](const std::vector<int>& ids) {
        auto p = VertexPartition::from_class_ids(ids);
        ++report.optimal_count;
        ++report.singular_histogram[p.singular_count()];
        if (report.optimal_partitions.size() < limits.max_report_partitions)
            report.optimal_partitions.push_back(std::move(p));
        else
            report.partitions_capped = true;
        return true;
    });
    report.nodes = decision_nodes + search.nodes();
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return report;
}

}  // namespace

std::string DisconnectionReport::to_json() const {
    nlohmann::json j;
    j["variant"] = std::string(variant_name(variant));
    j["value"] = value;
    j["optimal_partition_count"] = optimal_count;
    j["partitions_capped"] = partitions_capped;
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [singulars, count] : singular_histogram)
        hist[std::to_string(singulars)] = count;
    j["singular_histogram"] = hist;
    j["nodes"] = nodes;
    j["elapsed_seconds"] = elapsed_seconds;
    return j.dump();
}

DisconnectionReport omega3(const CirculantTournament& t,
                           const SearchLimits& limits) {
    return full_report(t, Variant::triangle_free, limits);
}

DisconnectionReport omega(const CirculantTournament& t,
                          const SearchLimits& limits) {
    return full_report(t, Variant::acyclic, limits);
}

int omega3_value(const CirculantTournament& t, const SearchLimits& limits) {
    check_bound(t.order(), limits.tight_decision_max_order, limits.allow_slow,
                "decision order");
    return value_by_decisions(t, Variant::triangle_free, nullptr);
}

int omega_value(const CirculantTournament& t, const SearchLimits& limits) {
    check_bound(t.order(), limits.full_report_max_order, limits.allow_slow,
                "full-report order");
    return value_by_decisions(t, Variant::acyclic, nullptr);
}

bool is_tight(const CirculantTournament& t, const SearchLimits& limits) {
    check_bound(t.order(), limits.tight_decision_max_order, limits.allow_slow,
                "decision order");
    PartitionSearch search(t, Variant::triangle_free);
    return !search.decide(3);
}

void for_each_optimal_partition(
    const CirculantTournament& t, Variant variant,
    const std::function<bool(const VertexPartition&)>& fn,
    const SearchLimits& limits) {
    check_bound(t.order(), limits.full_report_max_order, limits.allow_slow,
                "full-report order");
    int value = value_by_decisions(t, variant, nullptr);
    PartitionSearch search(t, variant);
    search.enumerate(value, [&](const std::vector<int>& ids) {
        return fn(VertexPartition::from_class_ids(ids));
    });
}

std::vector<VertexPartition> enumerate_optimal_partitions(
    const CirculantTournament& t, Variant variant, const SearchLimits& limits) {
    std::vector<VertexPartition> out;
    for_each_optimal_partition(
        t, variant,
        [&](const VertexPartition& p) {
            out.push_back(p);
            return true;
        },
        limits);
    return out;
}

KeennessDetail keenness_detail(const CirculantTournament& t, Variant variant,
                               const SearchLimits& limits) {
    KeennessDetail detail;
    for_each_optimal_partition(
        t, variant,
        [&](const VertexPartition& p) {
            int s = p.singular_count();
            ++detail.optimal_count;
            if (s == 1) ++detail.with_one_singular;
            detail.max_singular = std::max(detail.max_singular, s);
            return true;
        },
        limits);
    detail.keen = detail.max_singular <= 1 && detail.with_one_singular > 0;
    return detail;
}

bool keenness_check(const CirculantTournament& t, Variant variant,
                    const SearchLimits& limits) {
    return keenness_detail(t, variant, limits).keen;
}

bool singular_bound_holds(const CirculantTournament& t,
                          const SearchLimits& limits) {
    check_bound(t.order(), limits.full_report_max_order, limits.allow_slow,
                "full-report order");
    bool holds = true;
    PartitionSearch search(t, Variant::triangle_free);
    search.enumerate_all([&](const std::vector<int>& ids) {
        std::vector<int> sizes;
        for (int label : ids) {
            if (label >= static_cast<int>(sizes.size()))
                sizes.resize(static_cast<size_t>(label) + 1, 0);
            ++sizes[static_cast<size_t>(label)];
        }
        int singles = static_cast<int>(std::count(sizes.begin(), sizes.end(), 1));
        if (singles > 1) {
            holds = false;
            return false;
        }
        return true;
    });
    return holds;
}

ThreeClassIdentities three_class_identities(const ResidueSet& a,
                                            const ResidueSet& b,
                                            const ResidueSet& c,
                                            const SymbolSet& j) {
    const ResidueSet& s = j.members();
    ThreeClassIdentities out;
    out.chain_empty =
        sumset(sumset(sumset(a, s).intersect(b), s).intersect(c), s)
            .intersect(a)
            .empty();
    ResidueSet twice_shifted = difference(difference(a, s), s);  // A-J-J
    out.shift_identity = difference(c.intersect(difference(a, s)), s) ==
                         difference(c, s).intersect(twice_shifted);
    out.complement_bound = sumset(a, s)
                               .intersect(b)
                               .intersect(difference(c, s))
                               .is_subset_of(complement(twice_shifted));
    return out;
}

ThreeClassIdentities lemma_identity_check(const SymbolSet& j,
                                          const VertexPartition& p) {
    if (p.class_count() != 3)
        throw std::invalid_argument("lemma_identity_check needs exactly three "
                                    "classes, got " +
                                    std::to_string(p.class_count()));
    if (p.order() != j.modulus())
        throw std::invalid_argument("partition order " + std::to_string(p.order()) +
                                    " does not match modulus " +
                                    std::to_string(j.modulus()));
    int m = j.modulus();
    return three_class_identities(ResidueSet(m, p.classes()[0]),
                                  ResidueSet(m, p.classes()[1]),
                                  ResidueSet(m, p.classes()[2]), j);
}

}  // namespace circulant
