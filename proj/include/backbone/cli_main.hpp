#pragma once

// argv-level entry point shared by the backbone-siege binary and the tests.
// Exit codes: 0 success, 1 input error (files, parsing, graph content),
// 2 config error (flags, budgets, strategy selection).

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "backbone/cli.hpp"

namespace backbone::cli {

namespace detail {

inline AttackStrategy make_strategy(const std::string& name,
                                    const std::optional<std::uint64_t>& seed) {
    if (name == "betweenness-seq") return AttackStrategy::betweenness_sequential();
    if (name == "betweenness-sim") return AttackStrategy::betweenness_simultaneous();
    if (name == "random") {
        if (!seed) throw ConfigError("random strategy requires --seed");
        return AttackStrategy::random_uniform(*seed);
    }
    throw ConfigError("unknown strategy '" + name +
                      "' (betweenness-seq, betweenness-sim, random)");
}

inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Internet-backbone peering graph: build, attack, measure"};
    app.name("backbone-siege");
    app.require_subcommand(1);

    DataPaths data;
    std::string out_path;
    unsigned workers = 0;  // 0 = one per hardware thread
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--ixp", data.ixp, "IXP membership CSV (asn,ixp_id)")
            ->required();
        cmd->add_option("--facility", data.facility,
                        "facility membership CSV (asn,facility_id)")
            ->required();
        cmd->add_option("--links", data.links, "direct link CSV (asn_a,asn_b)")
            ->required();
        cmd->add_option("--providers", data.providers, "provider ASN CSV (asn)")
            ->required();
        cmd->add_option("--out", out_path, "output CSV path")->required();
        cmd->add_option("--workers", workers,
                        "betweenness worker threads (0 = hardware)");
    };

    std::vector<std::string> strategy_names;
    std::optional<std::uint64_t> seed;
    std::string budget_text = "100%";
    std::string checkpoints_text;

    CLI::App* stats = app.add_subcommand("stats", "graph and go-index statistics");
    add_common(stats);

    CLI::App* attack = app.add_subcommand("attack", "run one attack campaign");
    add_common(attack);
    attack->add_option("--strategy", strategy_names,
                       "betweenness-seq | betweenness-sim | random");
    attack->add_option("--seed", seed, "RNG seed (random strategy only)");
    attack->add_option("--budget", budget_text, "strike count or percentage, e.g. 20%");
    attack->add_option("--checkpoints", checkpoints_text,
                       "comma-separated R_n fractions, default 0.01,0.1,0.2");

    CLI::App* compare = app.add_subcommand("compare", "side-by-side strategy table");
    add_common(compare);
    compare->add_option("--strategy", strategy_names,
                        "strategy per column; repeat at least twice");
    compare->add_option("--seed", seed, "RNG seed (random strategies only)");
    compare->add_option("--budget", budget_text, "strike count or percentage");
    compare->add_option("--checkpoints", checkpoints_text,
                        "comma-separated R_n fractions, default 0.01,0.1,0.2");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("backbone-siege");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const bool wants_random =
            std::find(strategy_names.begin(), strategy_names.end(), "random") !=
            strategy_names.end();
        if (seed && !wants_random && (*attack || *compare))
            throw ConfigError("--seed is only valid with the random strategy");

        if (*stats) {
            StatsConfig config;
            config.data = data;
            config.out = out_path;
            config.workers = detail::resolve_workers(workers);
            cmd_stats(config, out);
        } else if (*attack) {
            AttackConfig config;
            config.data = data;
            config.out = out_path;
            if (strategy_names.size() > 1)
                throw ConfigError("attack takes a single --strategy");
            if (!strategy_names.empty())
                config.strategy = detail::make_strategy(strategy_names.front(), seed);
            config.budget = Budget::parse(budget_text);
            if (!checkpoints_text.empty())
                config.checkpoints = parse_checkpoints(checkpoints_text);
            config.workers = detail::resolve_workers(workers);
            cmd_attack(config, out, err);
        } else if (*compare) {
            CompareConfig config;
            config.data = data;
            config.out = out_path;
            for (const std::string& name : strategy_names)
                config.strategies.push_back(detail::make_strategy(name, seed));
            config.budget = Budget::parse(budget_text);
            if (!checkpoints_text.empty())
                config.checkpoints = parse_checkpoints(checkpoints_text);
            config.workers = detail::resolve_workers(workers);
            cmd_compare(config, out, err);
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace backbone::cli
