// Command line front end: census over symbol sets, theorem verification
// suites, factorization, disconnection reports, and composition.
//
// Machine-parseable results go to stdout, diagnostics to stderr.
// Exit codes: 0 = success, 1 = a verification suite or internal invariant
// found a violation, 2 = usage, parse, or bounds error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circulant/census.hpp"
#include "circulant/config.hpp"
#include "circulant/errors.hpp"
#include "circulant/version.hpp"

namespace {

using namespace circulant;

int run(int argc, char** argv) {
    CLI::App app{"circulant tournament census and verification tool"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path,
                   "key = value file with bounds and defaults");

    // census
    auto* census_cmd = app.add_subcommand(
        "census", "classify every symbol set of one order");
    int order = 0;
    bool with_omega = false, with_keen = false, dedup = false;
    bool no_cache = false, allow_slow = false;
    int jobs = -1;
    std::string cache_path, format = "csv";
    std::uint64_t seed = 0;
    bool seed_set = false;
    census_cmd->add_option("--order", order, "odd order >= 3")->required();
    census_cmd->add_flag("--omega", with_omega, "also compute omega");
    census_cmd->add_flag("--keen", with_keen, "also compute keenness columns");
    census_cmd->add_flag("--dedup", dedup,
                         "one row per multiplier orbit (heuristic equivalence)");
    census_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    census_cmd->add_option("--cache", cache_path, "column cache file");
    census_cmd->add_flag("--no-cache-read", no_cache,
                         "ignore cached entries, still refresh them");
    census_cmd->add_option("--format", format, "csv or jsonl")
        ->check(CLI::IsMember({"csv", "jsonl"}));
    census_cmd->add_option("--seed", seed, "sampling seed")
        ->each([&](const std::string&) { seed_set = true; });
    census_cmd->add_flag("--allow-slow", allow_slow,
                         "acknowledge searches beyond the default bounds");

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "run a theorem verification suite");
    std::string suite;
    std::vector<int> orders;
    std::uint64_t trials = 10000;
    std::uint64_t vseed = 0;
    bool vseed_set = false, vallow_slow = false;
    verify_cmd->add_option("suite", suite, "char | final | keen | compose_roundtrip | lemmas | kneser | alspach")
        ->required();
    verify_cmd->add_option("--orders", orders, "orders (or moduli) to cover")
        ->delimiter(',');
    verify_cmd->add_option("--trials", trials, "randomized trial count");
    verify_cmd->add_option("--seed", vseed, "randomized trial seed")
        ->each([&](const std::string&) { vseed_set = true; });
    verify_cmd->add_flag("--allow-slow", vallow_slow,
                         "acknowledge searches beyond the default bounds");

    // factorize / omega3 / omega / compose
    auto* factorize_cmd =
        app.add_subcommand("factorize", "factor a symbol set into simple factors");
    std::string fsymbol;
    factorize_cmd->add_option("symbolset", fsymbol, "e.g. 9:{1,3,4,7}")->required();

    auto* omega3_cmd = app.add_subcommand(
        "omega3", "directed-triangle-free disconnection report");
    std::string o3symbol;
    bool o3allow_slow = false;
    omega3_cmd->add_option("symbolset", o3symbol, "e.g. 9:{1,3,4,7}")->required();
    omega3_cmd->add_flag("--allow-slow", o3allow_slow,
                         "acknowledge searches beyond the default bounds");

    auto* omega_cmd =
        app.add_subcommand("omega", "acyclic disconnection report");
    std::string osymbol;
    bool oallow_slow = false;
    omega_cmd->add_option("symbolset", osymbol, "e.g. 9:{1,2,3,4}")->required();
    omega_cmd->add_flag("--allow-slow", oallow_slow,
                        "acknowledge searches beyond the default bounds");

    auto* compose_cmd = app.add_subcommand(
        "compose", "symbol set of the lexicographic product C(J)[C(K)]");
    std::string jtext, ktext;
    compose_cmd->add_option("J", jtext, "outer symbol set")->required();
    compose_cmd->add_option("K", ktext, "inner symbol set")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints help/version or the usage error
        return code == 0 ? 0 : 2;
    }

    ToolConfig config;
    if (!config_path.empty()) config = load_config(config_path);

    if (*census_cmd) {
        CensusOptions opt;
        opt.limits = config.limits;
        opt.with_omega = with_omega;
        opt.with_keenness = with_keen;
        opt.dedup = dedup;
        opt.jobs = jobs >= 0 ? jobs : config.jobs;
        opt.cache_path = cache_path.empty() ? config.cache_path : cache_path;
        opt.bypass_cache = no_cache;
        opt.seed = seed_set ? seed : config.seed;
        if (allow_slow) opt.limits.allow_slow = true;
        auto rows = run_census(order, opt);
        std::cout << (format == "csv" ? to_csv(rows) : to_jsonl(rows));
        return 0;
    }
    if (*verify_cmd) {
        VerifyParams params;
        params.limits = config.limits;
        params.orders = orders;
        params.trials = trials;
        params.seed = vseed_set ? vseed : config.seed;
        if (vallow_slow) params.limits.allow_slow = true;
        VerifyReport report = verify(suite, params);
        std::cout << report.text();
        return report.passed ? 0 : 1;
    }
    if (*factorize_cmd) {
        std::cout << to_sexpr(factorize(SymbolSet::parse(fsymbol))) << "\n";
        return 0;
    }
    if (*omega3_cmd) {
        SearchLimits limits = config.limits;
        if (o3allow_slow) limits.allow_slow = true;
        CirculantTournament t(SymbolSet::parse(o3symbol));
        std::cout << omega3(t, limits).to_json() << "\n";
        return 0;
    }
    if (*omega_cmd) {
        SearchLimits limits = config.limits;
        if (oallow_slow) limits.allow_slow = true;
        CirculantTournament t(SymbolSet::parse(osymbol));
        std::cout << omega(t, limits).to_json() << "\n";
        return 0;
    }
    if (*compose_cmd) {
        std::cout << compose(SymbolSet::parse(jtext), SymbolSet::parse(ktext)).str()
                  << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
