#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/composition.hpp"
#include "circulant/disconnection.hpp"

// Census driver: enumerate symbol sets per order, classify them
// (AP / quasi-periodic / aperiodic / simple / tight), run the verification
// suites, cache results, and emit CSV / JSON-lines reports.

namespace circulant {

struct CensusOptions {
    bool with_omega = false;     // add the omega column (order-bounded)
    bool with_keenness = false;  // add keen_w3 / keen_w columns
    bool dedup = false;          // keep one symbol set per multiplier orbit
    int jobs = 0;                // worker threads; 0 = hardware concurrency
    std::string cache_path;     // empty = no cache
    bool bypass_cache = false;  // ignore cached entries, still write fresh ones
    SearchLimits limits;
    std::uint64_t seed = 42;    // module sampling + cache spot-check sampling
};

struct CensusRow {
    int order = 0;
    std::string symbol;
    bool is_ap = false;
    bool is_quasi_periodic = false;
    // Symbol sets always have trivial period, so "aperiodic" here is the
    // dichotomy classification: not quasi-periodic.
    bool is_aperiodic = false;
    bool is_simple = false;
    int sumset_size = 0;  // |J+J|
    int omega3 = 0;
    std::optional<int> omega;
    std::optional<bool> keen_w3;
    std::optional<bool> keen_w;
    std::string factorization;  // s-expression
    bool module_found = false;
    std::optional<int> orbit_size;  // only with dedup
    double elapsed_ms = 0.0;        // 0 when fully served from cache
};

// One row per symbol set (fewer with dedup), in enumeration order. Enforces
// the row invariants (simple = aperiodic = tight, omega = omega3, sumset
// bounds) and throws std::logic_error with a counterexample dump on any
// violation. With a cache path set, cached column values are reused and a
// seeded sample of up to 5 cache-served rows is recomputed and compared.
std::vector<CensusRow> run_census(int order, const CensusOptions& options = {});

std::string census_csv_header();
std::string to_csv(const CensusRow& row);
std::string to_csv(const std::vector<CensusRow>& rows);  // header + rows
std::string to_jsonl(const CensusRow& row);
std::string to_jsonl(const std::vector<CensusRow>& rows);

// The multiplier images {a*J : gcd(a, m) = 1}, deduplicated, sorted by
// ascending member lists; orbit.front() is the canonical representative.
std::vector<SymbolSet> multiplier_orbit(const SymbolSet& s);

struct VerifyParams {
    std::vector<int> orders;  // empty = suite default
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    SearchLimits limits;
};

struct VerifyReport {
    std::string suite;
    bool passed = false;
    std::uint64_t checks = 0;
    std::vector<std::string> failures;  // counterexamples
    std::vector<std::string> notes;     // summary statistics
    std::string text() const;           // key: value lines for stdout
};

// Suites: char, final, keen, compose_roundtrip, lemmas, kneser, alspach.
// Unknown suite names throw std::invalid_argument.
VerifyReport verify(std::string_view suite, const VerifyParams& params = {});
const std::vector<std::string>& verify_suites();

}  // namespace circulant
