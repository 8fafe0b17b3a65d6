#pragma once

// Command implementations behind the backbone-siege CLI: build a graph from
// record files and report stats, run one attack campaign, or compare
// strategies side by side. Everything here is deterministic for fixed inputs,
// seed and settings; output files are written atomically
// (write-temp-then-rename) and reals are printed with 9 significant digits.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "backbone/attack.hpp"
#include "backbone/ingest.hpp"
#include "backbone/metrics.hpp"

namespace backbone::cli {

inline std::string format_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

inline void write_file_atomic(const std::filesystem::path& target,
                              const std::string& content) {
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream stream(tmp, std::ios::binary | std::ios::trunc);
        if (!stream) throw InputError("cannot write " + tmp.string());
        stream << content;
        if (!stream) throw InputError("cannot write " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

// Strike budget: either an absolute count or a percentage of the edge set.
// Percentages floor and clamp to at least one strike so small graphs still run.
class Budget {
public:
    static Budget count(std::size_t n) {
        Budget b;
        b.count_ = n;
        return b;
    }
    static Budget percent(double p) {
        Budget b;
        b.percent_ = p;
        return b;
    }

    // Accepts "37" or "20%" (fractional percentages allowed).
    static Budget parse(const std::string& text) {
        if (text.empty()) throw ConfigError("invalid budget ''");
        if (text.back() == '%') {
            double value = 0.0;
            std::size_t used = 0;
            try {
                value = std::stod(text.substr(0, text.size() - 1), &used);
            } catch (const std::exception&) {
                throw ConfigError("invalid budget '" + text + "'");
            }
            if (used != text.size() - 1)
                throw ConfigError("invalid budget '" + text + "'");
            if (!(value > 0.0) || value > 100.0)
                throw ConfigError("budget percentage out of range: '" + text + "'");
            return percent(value);
        }
        for (char c : text)
            if (c < '0' || c > '9')
                throw ConfigError("invalid budget '" + text + "'");
        unsigned long long value = 0;
        try {
            value = std::stoull(text);
        } catch (const std::exception&) {
            throw ConfigError("invalid budget '" + text + "'");
        }
        if (value == 0) throw ConfigError("budget must be positive");
        return count(static_cast<std::size_t>(value));
    }

    struct Resolved {
        std::size_t strikes = 0;
        bool clamped = false;  // a percentage floored to zero strikes
    };
    Resolved resolve(std::size_t edge_count) const {
        if (count_) return {*count_, false};
        auto strikes = static_cast<std::size_t>(
            percent_ / 100.0 * static_cast<double>(edge_count));
        if (strikes == 0) return {1, true};
        return {strikes, false};
    }

    std::string display() const {
        if (count_) return std::to_string(*count_);
        return format_real(percent_) + "%";
    }

private:
    std::optional<std::size_t> count_;
    double percent_ = 0.0;
};

// Comma-separated list of fractions in (0, 1].
inline std::vector<double> parse_checkpoints(const std::string& text) {
    std::vector<double> fractions;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("invalid checkpoint '" + item + "'");
        }
        if (used != item.size()) throw ConfigError("invalid checkpoint '" + item + "'");
        if (!(value > 0.0) || value > 1.0)
            throw ConfigError("checkpoint fractions must lie in (0, 1]: '" + item + "'");
        fractions.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (fractions.empty()) throw ConfigError("checkpoint list is empty");
    return fractions;
}

inline std::vector<double> default_checkpoints() { return {0.01, 0.10, 0.20}; }

struct DataPaths {
    std::filesystem::path ixp;
    std::filesystem::path facility;
    std::filesystem::path links;
    std::filesystem::path providers;
};

struct StatsConfig {
    DataPaths data;
    std::filesystem::path out;
    unsigned workers = 1;
};

struct AttackConfig {
    DataPaths data;
    std::filesystem::path out;
    AttackStrategy strategy = AttackStrategy::betweenness_sequential();
    Budget budget = Budget::percent(100.0);
    std::vector<double> checkpoints = default_checkpoints();
    unsigned workers = 1;
};

struct CompareConfig {
    DataPaths data;
    std::filesystem::path out;
    std::vector<AttackStrategy> strategies;
    Budget budget = Budget::percent(100.0);
    std::vector<double> checkpoints = default_checkpoints();
    unsigned workers = 1;
};

inline PeeringGraph load_graph(const DataPaths& data) {
    return build_graph(
        parse_records(data.ixp, data.facility, data.links, data.providers));
}

// Strike index for a checkpoint fraction of the initial edge set, floored and
// clamped to at least one; reported only when the trace reaches it.
inline std::size_t checkpoint_strikes(double fraction, std::size_t edge_count) {
    auto n = static_cast<std::size_t>(fraction * static_cast<double>(edge_count));
    return n == 0 ? 1 : n;
}

inline std::string trace_csv(const AttackTrace& trace) {
    std::string out =
        "strike,edge_id,asn_a,asn_b,betweenness,s_q,sar,netcon,netcon_fraction,"
        "bde,ade\n";
    for (const Strike& strike : trace.strikes) {
        out += std::to_string(strike.index);
        out += ',';
        out += std::to_string(strike.edge_id);
        out += ',';
        out += std::to_string(strike.asn_a);
        out += ',';
        out += std::to_string(strike.asn_b);
        out += ',';
        if (strike.betweenness) out += format_real(*strike.betweenness);
        out += ',';
        out += format_real(strike.s_q);
        if (strike.go_index) {
            const GoIndexSnapshot& go = *strike.go_index;
            out += ',';
            out += format_real(go.sar);
            out += ',';
            out += std::to_string(go.netcon);
            out += ',';
            out += format_real(go.netcon_fraction);
            out += ',';
            out += format_real(go.bde);
            out += ',';
            out += format_real(go.ade);
        } else {
            out += ",,,,,";
        }
        out += '\n';
    }
    return out;
}

inline void cmd_stats(const StatsConfig& config, std::ostream& human) {
    PeeringGraph graph = load_graph(config.data);
    const double lcc = largest_component_fraction(graph);  // rejects empty graphs

    std::size_t public_edges = 0, private_edges = 0, direct_edges = 0;
    for (const Edge& e : graph.edges()) {
        if (e.labels.contains(EdgeLabel::PublicPeering)) ++public_edges;
        if (e.labels.contains(EdgeLabel::PrivatePeering)) ++private_edges;
        if (e.labels.contains(EdgeLabel::DirectLink)) ++direct_edges;
    }
    auto degrees = degree_distribution(graph);
    GoIndexSnapshot go = go_index(graph);

    std::string csv = "key,value\n";
    csv += "nodes," + std::to_string(graph.node_count()) + "\n";
    csv += "edges," + std::to_string(graph.edge_count()) + "\n";
    csv += "edges_public," + std::to_string(public_edges) + "\n";
    csv += "edges_private," + std::to_string(private_edges) + "\n";
    csv += "edges_direct," + std::to_string(direct_edges) + "\n";
    csv += "lcc_fraction," + format_real(lcc) + "\n";
    csv += "sar," + format_real(go.sar) + "\n";
    csv += "netcon," + std::to_string(go.netcon) + "\n";
    csv += "netcon_fraction," + format_real(go.netcon_fraction) + "\n";
    csv += "bde," + format_real(go.bde) + "\n";
    csv += "ade," + format_real(go.ade) + "\n";
    for (const auto& [degree, count] : degrees)
        csv += "degree_" + std::to_string(degree) + "," + std::to_string(count) + "\n";
    write_file_atomic(config.out, csv);

    human << "nodes:        " << graph.node_count() << "\n";
    human << "edges:        " << graph.edge_count() << " (public " << public_edges
          << ", private " << private_edges << ", direct " << direct_edges << ")\n";
    human << "lcc fraction: " << format_real(lcc) << "\n";
    human << "go-index:     sar " << format_real(go.sar) << ", netcon " << go.netcon
          << " (" << format_real(go.netcon_fraction) << "), bde "
          << format_real(go.bde) << ", ade " << format_real(go.ade) << "\n";
    human << "degree histogram:\n";
    for (const auto& [degree, count] : degrees)
        human << "  " << degree << ": " << count << "\n";
    human << "stats written to " << config.out.string() << "\n";
}

inline void summarize_checkpoints(const AttackTrace& trace,
                                  const std::vector<double>& checkpoints,
                                  std::ostream& human) {
    human << "R_n checkpoints (fractions of the initial edge set):\n";
    for (double fraction : checkpoints) {
        std::size_t n = checkpoint_strikes(fraction, trace.initial_edge_count);
        human << "  " << format_real(fraction * 100.0) << "% of edges (n=" << n
              << "): ";
        if (n > trace.strikes.size())
            human << "n/a (trace has " << trace.strikes.size() << " strikes)\n";
        else
            human << format_real(r_n_index(trace, n)) << "\n";
    }
}

inline void cmd_attack(const AttackConfig& config, std::ostream& human,
                       std::ostream& diag) {
    PeeringGraph graph = load_graph(config.data);
    auto resolved = config.budget.resolve(graph.edge_count());
    if (resolved.clamped)
        diag << "warning: budget " << config.budget.display()
             << " resolved to 0 strikes; clamped to 1\n";

    AttackTrace trace =
        run_attack(graph, config.strategy, resolved.strikes, config.workers);
    write_file_atomic(config.out, trace_csv(trace));

    human << "graph: " << graph.node_count() << " nodes, " << graph.edge_count()
          << " edges\n";
    human << "strategy: " << config.strategy.name() << "\n";
    human << "strikes: " << trace.strikes.size() << "\n";
    human << "final s_Q: " << format_real(trace.strikes.back().s_q) << "\n";
    summarize_checkpoints(trace, config.checkpoints, human);
    if (trace.strikes.size() == trace.initial_edge_count)
        human << "R (complete trace): " << format_real(r_index(trace)) << "\n";
    human << "trace written to " << config.out.string() << "\n";
}

inline void cmd_compare(const CompareConfig& config, std::ostream& human,
                        std::ostream& diag) {
    if (config.strategies.size() < 2)
        throw ConfigError("need at least two strategies");
    PeeringGraph graph = load_graph(config.data);
    auto resolved = config.budget.resolve(graph.edge_count());
    if (resolved.clamped)
        diag << "warning: budget " << config.budget.display()
             << " resolved to 0 strikes; clamped to 1\n";

    std::vector<AttackTrace> traces;
    traces.reserve(config.strategies.size());
    for (const AttackStrategy& strategy : config.strategies)
        traces.push_back(
            run_attack(graph, strategy, resolved.strikes, config.workers));

    std::string csv = "checkpoint,n";
    for (const AttackStrategy& strategy : config.strategies) {
        csv += ',';
        csv += strategy.name();
    }
    csv += '\n';
    for (double fraction : config.checkpoints) {
        std::size_t n = checkpoint_strikes(fraction, graph.edge_count());
        if (n > resolved.strikes) {
            diag << "warning: checkpoint " << format_real(fraction)
                 << " needs n=" << n << " strikes; trace has " << resolved.strikes
                 << "; skipped\n";
            continue;
        }
        csv += format_real(fraction);
        csv += ',';
        csv += std::to_string(n);
        for (const AttackTrace& trace : traces) {
            csv += ',';
            csv += format_real(r_n_index(trace, n));
        }
        csv += '\n';
    }
    write_file_atomic(config.out, csv);

    human << "graph: " << graph.node_count() << " nodes, " << graph.edge_count()
          << " edges\n";
    human << "strikes per strategy: " << resolved.strikes << "\n";
    for (std::size_t i = 0; i < config.strategies.size(); ++i)
        human << "  " << config.strategies[i].name() << ": final s_Q "
              << format_real(traces[i].strikes.back().s_q) << "\n";
    human << "table written to " << config.out.string() << "\n";
}

}  // namespace backbone::cli
