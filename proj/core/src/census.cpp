#include "circulant/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "circulant/errors.hpp"
#include "circulant/version.hpp"

namespace circulant {

namespace {

using nlohmann::json;

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\" ") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string census_csv_header() {
    return "order,symbol,is_ap,is_quasi_periodic,is_aperiodic,is_simple,"
           "sumset_size,omega3,omega,keen_w3,keen_w,factorization,"
           "module_found,orbit_size,elapsed_ms";
}

std::string to_csv(const CensusRow& r) {
    std::ostringstream out;
    out << r.order << ',' << csv_quote(r.symbol) << ',' << fmt_bool(r.is_ap)
        << ',' << fmt_bool(r.is_quasi_periodic) << ',' << fmt_bool(r.is_aperiodic)
        << ',' << fmt_bool(r.is_simple) << ',' << r.sumset_size << ','
        << r.omega3 << ',';
    if (r.omega) out << *r.omega;
    out << ',';
    if (r.keen_w3) out << fmt_bool(*r.keen_w3);
    out << ',';
    if (r.keen_w) out << fmt_bool(*r.keen_w);
    out << ',' << csv_quote(r.factorization) << ',' << fmt_bool(r.module_found)
        << ',';
    if (r.orbit_size) out << *r.orbit_size;
    out << ',' << r.elapsed_ms;
    return out.str();
}

std::string to_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << census_csv_header() << '\n';
    for (const auto& r : rows) out << to_csv(r) << '\n';
    return out.str();
}

namespace {

json row_json(const CensusRow& r) {
    json j;
    j["order"] = r.order;
    j["symbol"] = r.symbol;
    j["is_ap"] = r.is_ap;
    j["is_quasi_periodic"] = r.is_quasi_periodic;
    j["is_aperiodic"] = r.is_aperiodic;
    j["is_simple"] = r.is_simple;
    j["sumset_size"] = r.sumset_size;
    j["omega3"] = r.omega3;
    j["omega"] = r.omega ? json(*r.omega) : json(nullptr);
    j["keen_w3"] = r.keen_w3 ? json(*r.keen_w3) : json(nullptr);
    j["keen_w"] = r.keen_w ? json(*r.keen_w) : json(nullptr);
    j["factorization"] = r.factorization;
    j["module_found"] = r.module_found;
    j["orbit_size"] = r.orbit_size ? json(*r.orbit_size) : json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

std::string to_jsonl(const CensusRow& r) { return row_json(r).dump(); }

std::string to_jsonl(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) out << to_jsonl(r) << '\n';
    return out.str();
}

std::vector<SymbolSet> multiplier_orbit(const SymbolSet& s) {
    int m = s.modulus();
    std::vector<SymbolSet> orbit;
    for (int a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1) continue;
        SymbolSet image{dilate(a, s.members())};
        if (std::find(orbit.begin(), orbit.end(), image) == orbit.end())
            orbit.push_back(std::move(image));
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const SymbolSet& x, const SymbolSet& y) {
                  return x.members().members() < y.members().members();
              });
    return orbit;
}

namespace {

// One cache entry per (order, symbol, column, code version). Stored as
// JSON lines; the whole file is loaded up front, fresh entries are
// appended by a single writer after the parallel phase.
class ColumnCache {
public:
    explicit ColumnCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("key") || !j.contains("value"))
                continue;  // advisory store: skip lines we cannot read
            entries_[j["key"].get<std::string>()] = j["value"];
        }
    }

    static std::string key(int order, const std::string& symbol,
                           const std::string& column) {
        return std::to_string(order) + "|" + symbol + "|" + column + "|" +
               std::string(kVersion);
    }

    std::optional<json> get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return std::make_optional(it->second);
    }

    void stage(std::string key, json value) {
        std::lock_guard<std::mutex> lock(mutex_);
        fresh_.emplace_back(std::move(key), std::move(value));
    }

    void flush() {
        if (fresh_.empty()) return;
        std::ofstream out(path_, std::ios::app);
        if (!out) {
            std::cerr << "census: cannot write cache file " << path_ << "\n";
            return;
        }
        for (auto& [k, v] : fresh_) {
            json j;
            j["key"] = k;
            j["value"] = v;
            out << j.dump() << '\n';
            entries_[k] = std::move(v);
        }
        fresh_.clear();
    }

private:
    std::string path_;
    std::unordered_map<std::string, json> entries_;
    std::vector<std::pair<std::string, json>> fresh_;
    std::mutex mutex_;
};

struct RowBuild {
    CensusRow row;
    bool any_cached = false;
    bool any_computed = false;
};

RowBuild build_row(const SymbolSet& s, const CensusOptions& opt,
                   ColumnCache* cache) {
    auto t0 = std::chrono::steady_clock::now();
    RowBuild b;
    CensusRow& r = b.row;
    r.order = s.modulus();
    r.symbol = s.str();

    bool use_cache = cache != nullptr && !opt.bypass_cache;
    auto lookup = [&](const char* column) -> std::optional<json> {
        if (!use_cache) return std::nullopt;
        auto v = cache->get(ColumnCache::key(r.order, r.symbol, column));
        if (v) b.any_cached = true;
        return v;
    };
    auto store = [&](const char* column, json value) {
        b.any_computed = true;
        if (cache != nullptr)
            cache->stage(ColumnCache::key(r.order, r.symbol, column),
                         std::move(value));
    };

    CirculantTournament t(s);

    if (auto v = lookup("is_ap")) {
        r.is_ap = v->get<bool>();
    } else {
        r.is_ap = is_arithmetic_progression(s.members());
        store("is_ap", r.is_ap);
    }

    if (auto v = lookup("is_quasi_periodic")) {
        r.is_quasi_periodic = v->get<bool>();
    } else {
        auto witnesses = quasi_periodic_witnesses(s.members());
        r.is_quasi_periodic = !witnesses.empty();
        if (r.is_quasi_periodic &&
            std::all_of(witnesses.begin(), witnesses.end(),
                        [](const QuasiPeriodicWitness& w) {
                            return w.periodic_part.empty();
                        }))
            std::cerr << "census: FLAG " << r.symbol
                      << " is quasi-periodic only through witnesses with an "
                         "empty periodic part\n";
        store("is_quasi_periodic", r.is_quasi_periodic);
    }

    // Symbol sets are never periodic; the dichotomy classification below
    // relies on that, so verify it.
    if (!period(s.members()).is_trivial())
        throw std::logic_error("symbol set with a nontrivial period: " +
                               r.symbol);
    r.is_aperiodic = !r.is_quasi_periodic;

    if (auto v = lookup("is_simple")) {
        r.is_simple = v->get<bool>();
    } else {
        r.is_simple = is_simple(s);
        store("is_simple", r.is_simple);
    }

    if (auto v = lookup("sumset_size")) {
        r.sumset_size = v->get<int>();
    } else {
        r.sumset_size = sumset(s.members(), s.members()).size();
        store("sumset_size", r.sumset_size);
    }

    if (auto v = lookup("omega3")) {
        r.omega3 = v->get<int>();
    } else {
        r.omega3 = omega3_value(t, opt.limits);
        store("omega3", r.omega3);
    }

    if (opt.with_omega) {
        if (auto v = lookup("omega")) {
            r.omega = v->get<int>();
        } else {
            r.omega = omega_value(t, opt.limits);
            store("omega", *r.omega);
        }
    }

    if (opt.with_keenness) {
        if (auto v = lookup("keen_w3")) {
            r.keen_w3 = v->get<bool>();
        } else {
            r.keen_w3 = keenness_check(t, Variant::triangle_free, opt.limits);
            store("keen_w3", *r.keen_w3);
        }
        if (auto v = lookup("keen_w")) {
            r.keen_w = v->get<bool>();
        } else {
            r.keen_w = keenness_check(t, Variant::acyclic, opt.limits);
            store("keen_w", *r.keen_w);
        }
    }

    if (auto v = lookup("factorization")) {
        r.factorization = v->get<std::string>();
    } else {
        r.factorization = to_sexpr(factorize(s));
        store("factorization", r.factorization);
    }

    if (auto v = lookup("module_found")) {
        r.module_found = v->get<bool>();
    } else {
        r.module_found = find_module(t, opt.seed).has_value();
        store("module_found", r.module_found);
    }

    r.elapsed_ms = b.any_computed
                       ? std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count()
                       : 0.0;
    return b;
}

void enforce_row_invariants(const CensusRow& r) {
    auto dump = [&](const std::string& what) {
        return "census row invariant violated (" + what + "): " + to_jsonl(r);
    };
    bool tight = r.omega3 == 2;
    if (r.is_simple != r.is_aperiodic || r.is_simple != tight)
        throw std::logic_error(dump("simple = aperiodic = tight"));
    if (r.omega && *r.omega != r.omega3)
        throw std::logic_error(dump("omega = omega3"));
    int n = (r.order - 1) / 2;
    if (r.sumset_size < 2 * n - 1 || r.sumset_size > 2 * n)
        throw std::logic_error(dump("2|J|-1 <= |J+J| <= 2|J|"));
    // Module existence and simplicity are recorded, not asserted (the
    // sampling above order 15 is heuristic); disagreement at exhaustive
    // orders is surfaced for review.
    if (r.order <= 15 && r.is_simple == r.module_found)
        std::cerr << "census: FLAG " << r.symbol << " is_simple="
                  << fmt_bool(r.is_simple) << " but module_found="
                  << fmt_bool(r.module_found) << "\n";
}

}  // namespace

std::vector<CensusRow> run_census(int order, const CensusOptions& options) {
    if (order < 3 || order % 2 == 0)
        throw std::invalid_argument("census order must be odd and >= 3, got " +
                                    std::to_string(order));
    int n = (order - 1) / 2;
    std::vector<SymbolSet> sets = enumerate_symbol_sets(n);

    std::vector<std::optional<int>> orbit_sizes(sets.size());
    if (options.dedup) {
        std::vector<SymbolSet> reps;
        std::vector<std::optional<int>> sizes;
        for (const auto& s : sets) {
            auto orbit = multiplier_orbit(s);
            if (orbit.front() == s) {
                reps.push_back(s);
                sizes.emplace_back(static_cast<int>(orbit.size()));
            }
        }
        sets = std::move(reps);
        orbit_sizes = std::move(sizes);
    }

    std::unique_ptr<ColumnCache> cache;
    if (!options.cache_path.empty())
        cache = std::make_unique<ColumnCache>(options.cache_path);

    std::vector<RowBuild> builds(sets.size());
    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    int jobs = options.jobs > 0
                   ? options.jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(sets.size())));

    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= sets.size()) return;
            try {
                builds[i] = build_row(sets[i], options, cache.get());
                builds[i].row.orbit_size = orbit_sizes[i];
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);

    std::vector<CensusRow> rows;
    rows.reserve(builds.size());
    for (auto& b : builds) rows.push_back(std::move(b.row));
    for (const auto& r : rows) enforce_row_invariants(r);

    if (cache) {
        // Fresh rows become cache entries; then spot-check coherence on a
        // seeded sample of rows that were (at least partly) cache-served.
        cache->flush();
        std::vector<size_t> cached_rows;
        for (size_t i = 0; i < builds.size(); ++i)
            if (builds[i].any_cached) cached_rows.push_back(i);
        if (!cached_rows.empty()) {
            std::mt19937_64 rng(options.seed);
            std::shuffle(cached_rows.begin(), cached_rows.end(), rng);
            cached_rows.resize(std::min<size_t>(5, cached_rows.size()));
            for (size_t i : cached_rows) {
                CensusOptions fresh_opt = options;
                fresh_opt.bypass_cache = true;
                CensusRow fresh = build_row(sets[i], fresh_opt, nullptr).row;
                const CensusRow& got = rows[i];
                if (fresh.is_ap != got.is_ap ||
                    fresh.is_quasi_periodic != got.is_quasi_periodic ||
                    fresh.is_simple != got.is_simple ||
                    fresh.sumset_size != got.sumset_size ||
                    fresh.omega3 != got.omega3 || fresh.omega != got.omega ||
                    fresh.keen_w3 != got.keen_w3 || fresh.keen_w != got.keen_w ||
                    fresh.factorization != got.factorization ||
                    fresh.module_found != got.module_found)
                    throw std::logic_error(
                        "census cache is incoherent for " + got.symbol +
                        ": cached " + to_jsonl(got) + " vs fresh " +
                        to_jsonl(fresh));
            }
        }
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

namespace {

struct SuiteContext {
    VerifyReport report;
    std::uint64_t failure_cap = 16;

    void check(bool ok, const std::function<std::string()>& describe) {
        ++report.checks;
        if (!ok && report.failures.size() < failure_cap)
            report.failures.push_back(describe());
        if (!ok && report.failures.size() >= failure_cap)
            report.failures.back() = "... more failures suppressed";
    }
    void note(std::string text) { report.notes.push_back(std::move(text)); }
};

std::vector<int> orders_or(const VerifyParams& p, std::vector<int> fallback) {
    return p.orders.empty() ? fallback : p.orders;
}

void require_odd_orders(const std::vector<int>& orders) {
    for (int o : orders)
        if (o < 3 || o % 2 == 0)
            throw std::invalid_argument("orders must be odd and >= 3, got " +
                                        std::to_string(o));
}

VerifyReport suite_char(const VerifyParams& params) {
    SuiteContext ctx;
    auto orders = orders_or(params, {7, 9, 11, 13, 15});
    require_odd_orders(orders);
    for (int order : orders) {
        int simple_count = 0;
        for_each_symbol_set((order - 1) / 2, [&](const SymbolSet& s) {
            ctx.check(period(s.members()).is_trivial(), [&] {
                return "nontrivial period for symbol set " + s.str();
            });
            bool tight = is_tight(CirculantTournament(s), params.limits);
            bool simple = is_simple(s);
            bool aperiodic = !is_quasi_periodic(s.members());
            if (simple) ++simple_count;
            ctx.check(tight == simple && simple == aperiodic, [&] {
                return s.str() + ": tight=" + fmt_bool(tight) +
                       " simple=" + fmt_bool(simple) +
                       " aperiodic=" + fmt_bool(aperiodic);
            });
        });
        ctx.note("order " + std::to_string(order) + ": " +
                 std::to_string(simple_count) + " simple of " +
                 std::to_string(1 << ((order - 1) / 2)));
    }
    return ctx.report;
}

VerifyReport suite_final(const VerifyParams& params) {
    SuiteContext ctx;
    auto orders = orders_or(params, {7, 9, 11, 13});
    require_odd_orders(orders);
    for (int order : orders) {
        for_each_symbol_set((order - 1) / 2, [&](const SymbolSet& s) {
            CirculantTournament t(s);
            int w3 = omega3_value(t, params.limits);
            int w = omega_value(t, params.limits);
            ctx.check(w == w3, [&] {
                return s.str() + ": omega=" + std::to_string(w) +
                       " omega3=" + std::to_string(w3);
            });
        });
        ctx.note("order " + std::to_string(order) + " done");
    }
    return ctx.report;
}

VerifyReport suite_keen(const VerifyParams& params) {
    SuiteContext ctx;
    auto orders = orders_or(params, {7, 9, 11, 13});
    require_odd_orders(orders);
    for (int order : orders) {
        for_each_symbol_set((order - 1) / 2, [&](const SymbolSet& s) {
            CirculantTournament t(s);
            for (Variant variant : {Variant::triangle_free, Variant::acyclic}) {
                auto detail = keenness_detail(t, variant, params.limits);
                ctx.check(detail.keen, [&] {
                    return s.str() + " (" + std::string(variant_name(variant)) +
                           "): max_singular=" +
                           std::to_string(detail.max_singular) +
                           " with_one_singular=" +
                           std::to_string(detail.with_one_singular) + " of " +
                           std::to_string(detail.optimal_count);
                });
            }
            if (order <= 9)
                ctx.check(singular_bound_holds(t, params.limits), [&] {
                    return s.str() +
                           ": an externally C3-free partition has two "
                           "singular classes";
                });
        });
        ctx.note("order " + std::to_string(order) + " done");
    }
    return ctx.report;
}

VerifyReport suite_compose_roundtrip(const VerifyParams& params) {
    SuiteContext ctx;
    std::vector<std::pair<int, int>> shapes = {
        {1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};  // half-sizes (m, n)
    if (!params.orders.empty())
        ctx.note("compose_roundtrip ignores --orders; fixed factor shapes");
    for (auto [hm, hn] : shapes) {
        for (const auto& j : enumerate_symbol_sets(hm)) {
            for (const auto& k : enumerate_symbol_sets(hn)) {
                SymbolSet l = compose(j, k);
                ctx.check(l.half_size() == hm * (2 * hn + 1) + hn, [&] {
                    return "compose(" + j.str() + ", " + k.str() +
                           ") has wrong half size";
                });
                auto d = decompose(l);
                ctx.check(d.has_value(), [&] {
                    return "decompose(" + l.str() + ") absent";
                });
                if (!d) continue;
                ctx.check(compose(d->outer, d->inner) == l, [&] {
                    return "decompose(" + l.str() + ") does not recompose";
                });
                ctx.check(verify_composition(d->outer, d->inner, l), [&] {
                    return "arc sets differ for decomposition of " + l.str();
                });
                ctx.check(verify_composition(j, k, l), [&] {
                    return "arc sets differ for compose(" + j.str() + ", " +
                           k.str() + ")";
                });
            }
        }
        ctx.note("shape (" + std::to_string(2 * hm + 1) + "," +
                 std::to_string(2 * hn + 1) + ") done");
    }
    return ctx.report;
}

// A seeded random surjective 3-class partition of Z_m.
VertexPartition random_three_partition(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<int> ids(static_cast<size_t>(m));
    for (;;) {
        bool seen[3] = {false, false, false};
        for (auto& id : ids) {
            id = pick(rng);
            seen[id] = true;
        }
        if (seen[0] && seen[1] && seen[2]) return VertexPartition::from_class_ids(ids);
    }
}

// Partition classes in the role order the lemma package needs: A the
// smallest class, B the largest.
std::array<ResidueSet, 3> lemma_roles(const VertexPartition& p, int m) {
    std::array<ResidueSet, 3> cl = {ResidueSet(m, p.classes()[0]),
                                    ResidueSet(m, p.classes()[1]),
                                    ResidueSet(m, p.classes()[2])};
    std::sort(cl.begin(), cl.end(), [](const ResidueSet& x, const ResidueSet& y) {
        return x.size() < y.size();
    });
    return {cl[0], cl[2], cl[1]};  // smallest, largest, middle
}

VerifyReport suite_lemmas(const VerifyParams& params) {
    SuiteContext ctx;
    auto moduli = orders_or(params, {9, 11, 13});
    require_odd_orders(moduli);
    for (int m : moduli) {
        std::vector<SymbolSet> sets = enumerate_symbol_sets((m - 1) / 2);
        std::vector<CirculantTournament> tournaments;
        tournaments.reserve(sets.size());
        for (const auto& s : sets) tournaments.emplace_back(s);

        auto check_unconditional = [&](const SymbolSet& s,
                                       const VertexPartition& p) {
            const ResidueSet& j = s.members();
            ResidueSet a(m, p.classes()[0]);
            ResidueSet b(m, p.classes()[1]);
            ResidueSet c(m, p.classes()[2]);
            ResidueSet ajj = difference(difference(a, j), j);
            ctx.check(difference(c.intersect(difference(a, j)), j)
                          .is_subset_of(difference(c, j).intersect(ajj)),
                      [&] {
                          return "shift inclusion fails for " + s.str() +
                                 " with " + p.str();
                      });
            auto ids = lemma_identity_check(s, p);
            ctx.check(!ids.complement_bound || ids.chain_empty, [&] {
                return "containment does not imply empty chain for " + s.str() +
                       " with " + p.str();
            });
        };
        auto check_c3free_package = [&](const SymbolSet& s,
                                        const VertexPartition& p) {
            auto roles = lemma_roles(p, m);
            auto ids = three_class_identities(roles[0], roles[1], roles[2], s);
            ctx.check(ids.chain_empty && ids.shift_identity &&
                          ids.complement_bound,
                      [&] {
                          return "lemma package fails on externally C3-free " +
                                 p.str() + " for " + s.str();
                      });
        };

        std::mt19937_64 rng(params.seed ^ (static_cast<std::uint64_t>(m) << 32));
        std::uint64_t c3free_hits = 0;
        for (std::uint64_t trial = 0; trial < params.trials; ++trial) {
            VertexPartition p = random_three_partition(m, rng);
            for (size_t i = 0; i < sets.size(); ++i) {
                check_unconditional(sets[i], p);
                if (is_externally_c3_free(tournaments[i], p)) {
                    ++c3free_hits;
                    check_c3free_package(sets[i], p);
                }
            }
        }
        // Full coverage of the conditional clause: every externally C3-free
        // 3-class partition is optimal, so enumerate them all directly.
        std::uint64_t enumerated = 0;
        if (m <= params.limits.full_report_max_order) {
            for (size_t i = 0; i < sets.size(); ++i) {
                if (is_tight(tournaments[i], params.limits)) continue;
                if (omega3_value(tournaments[i], params.limits) != 3) continue;
                for_each_optimal_partition(
                    tournaments[i], Variant::triangle_free,
                    [&](const VertexPartition& p) {
                        ++enumerated;
                        check_unconditional(sets[i], p);
                        check_c3free_package(sets[i], p);
                        return true;
                    },
                    params.limits);
            }
        }
        ctx.note("modulus " + std::to_string(m) + ": " +
                 std::to_string(c3free_hits) + " random C3-free hits, " +
                 std::to_string(enumerated) + " enumerated");
    }
    return ctx.report;
}

ResidueSet random_subset(int m, int min_size, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> word;
    for (;;) {
        detail::u128 bits =
            ((detail::u128{word(rng)} << 64) | word(rng)) & detail::low_mask(m);
        ResidueSet s = ResidueSet::from_bits(m, bits);
        if (s.size() >= min_size) return s;
    }
}

VerifyReport suite_kneser(const VerifyParams& params) {
    SuiteContext ctx;
    std::vector<int> orders = params.orders;
    if (orders.empty())
        for (int o = 3; o <= 25; o += 2) orders.push_back(o);
    require_odd_orders(orders);

    // Symbol-set sumset bounds, and the Kemperman-side dichotomy: a
    // critical sumset of a non-AP symbol set forces quasi-periodicity.
    // (The converse fails from order 21 on: a quasi-periodic set whose
    // inner factor has a full sumset reaches |J+J| = 2|J|. Those are
    // counted and reported, not asserted against.)
    std::uint64_t full_sum_quasi_periodic = 0;
    for (int order : orders) {
        int n = (order - 1) / 2;
        for_each_symbol_set(n, [&](const SymbolSet& s) {
            int size = sumset(s.members(), s.members()).size();
            ctx.check(2 * n - 1 <= size && size <= 2 * n, [&] {
                return s.str() + ": |J+J|=" + std::to_string(size);
            });
            if (!is_arithmetic_progression(s.members())) {
                bool qp = is_quasi_periodic(s.members());
                if (size == 2 * n - 1)
                    ctx.check(qp, [&] {
                        return s.str() + ": critical |J+J| without a "
                                         "quasi-periodic witness";
                    });
                else if (qp)
                    ++full_sum_quasi_periodic;
            }
        });
    }
    ctx.note("quasi-periodic sets with full sumset: " +
             std::to_string(full_sum_quasi_periodic));

    // Structure of critical pairs |A+B| = |A|+|B|-1: exhaustive for m <= 9,
    // seeded samples for 10 <= m <= 13.
    std::uint64_t critical = 0;
    auto check_pair = [&](const ResidueSet& a, const ResidueSet& b) {
        ResidueSet sum = sumset(a, b);
        KneserCheck kc = kneser_check(a, b);
        ctx.check(kc.bound_holds && kc.periodicity_clause_holds, [&] {
            return "kneser bounds fail for " + a.str() + " + " + b.str();
        });
        if (sum.size() != a.size() + b.size() - 1) return;
        ++critical;
        bool ok = is_arithmetic_progression(sum) || is_quasi_periodic(sum);
        ctx.check(ok, [&] {
            return "critical pair " + a.str() + " + " + b.str() + " = " +
                   sum.str() + " is neither AP nor quasi-periodic";
        });
    };
    for (int m = 2; m <= 9; ++m) {
        std::uint64_t total = std::uint64_t{1} << m;
        for (std::uint64_t abits = 1; abits < total; ++abits) {
            ResidueSet a = ResidueSet::from_bits(m, abits);
            if (a.size() < 2) continue;
            for (std::uint64_t bbits = 1; bbits < total; ++bbits) {
                ResidueSet b = ResidueSet::from_bits(m, bbits);
                if (b.size() < 2) continue;
                check_pair(a, b);
            }
        }
    }
    std::mt19937_64 rng(params.seed);
    for (int m = 10; m <= 13; ++m)
        for (std::uint64_t i = 0; i < params.trials; ++i)
            check_pair(random_subset(m, 2, rng), random_subset(m, 2, rng));
    ctx.note("critical pairs seen: " + std::to_string(critical));
    return ctx.report;
}

VerifyReport suite_alspach(const VerifyParams& params) {
    SuiteContext ctx;
    std::vector<int> orders = params.orders;
    if (orders.empty())
        for (int o = 3; o <= 15; o += 2) orders.push_back(o);
    require_odd_orders(orders);
    for (int order : orders)
        for_each_symbol_set((order - 1) / 2, [&](const SymbolSet& s) {
            ctx.check(alspach_check(CirculantTournament(s)), [&] {
                return s.str() + ": some arc lies in no directed triangle";
            });
        });
    return ctx.report;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites = {
        "char",   "final",  "keen",   "compose_roundtrip",
        "lemmas", "kneser", "alspach"};
    return suites;
}

VerifyReport verify(std::string_view suite, const VerifyParams& params) {
    VerifyReport report;
    if (suite == "char") report = suite_char(params);
    else if (suite == "final") report = suite_final(params);
    else if (suite == "keen") report = suite_keen(params);
    else if (suite == "compose_roundtrip") report = suite_compose_roundtrip(params);
    else if (suite == "lemmas") report = suite_lemmas(params);
    else if (suite == "kneser") report = suite_kneser(params);
    else if (suite == "alspach") report = suite_alspach(params);
    else
        throw std::invalid_argument("unknown verification suite '" +
                                    std::string(suite) + "'");
    report.suite = std::string(suite);
    report.passed = report.failures.empty();
    return report;
}

std::string VerifyReport::text() const {
    std::ostringstream out;
    out << "suite: " << suite << '\n';
    out << "checks: " << checks << '\n';
    for (const auto& n : notes) out << "note: " << n << '\n';
    for (const auto& f : failures) out << "counterexample: " << f << '\n';
    out << "status: " << (passed ? "PASS" : "FAIL") << '\n';
    return out.str();
}

}  // namespace circulant
