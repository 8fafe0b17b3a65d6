#pragma once

// Plain data shared between the attack engine, the robustness metrics and the
// CLI: attack strategies, per-strike records and the supply-metric snapshot.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

enum class AttackKind {
    BetweennessSequential,   // re-rank edges before every strike
    BetweennessSimultaneous, // rank once on the initial graph
    RandomUniform,           // uniformly random surviving edge per strike
};

struct AttackStrategy {
    AttackKind kind = AttackKind::BetweennessSequential;
    std::optional<std::uint64_t> seed;  // present iff kind == RandomUniform

    static AttackStrategy betweenness_sequential() {
        return {AttackKind::BetweennessSequential, std::nullopt};
    }
    static AttackStrategy betweenness_simultaneous() {
        return {AttackKind::BetweennessSimultaneous, std::nullopt};
    }
    static AttackStrategy random_uniform(std::uint64_t seed) {
        return {AttackKind::RandomUniform, seed};
    }

    std::string_view name() const {
        switch (kind) {
            case AttackKind::BetweennessSequential: return "betweenness-seq";
            case AttackKind::BetweennessSimultaneous: return "betweenness-sim";
            case AttackKind::RandomUniform: return "random";
        }
        return "unknown";
    }

    friend bool operator==(const AttackStrategy&, const AttackStrategy&) = default;
};

// The supply-network view at one instant, against the provider AS set.
struct GoIndexSnapshot {
    double sar = 0.0;             // fraction of demand ASs reaching a provider
    std::size_t netcon = 0;       // largest component holding a provider
    double netcon_fraction = 0.0; // netcon / node count
    double bde = 0.0;             // 1 / mean distance-to-nearest-provider
    double ade = 0.0;             // mean summed inverse distance to every provider

    friend bool operator==(const GoIndexSnapshot&, const GoIndexSnapshot&) = default;
};

struct Strike {
    std::uint32_t index = 0;  // 1-based strike counter Q
    EdgeId edge_id = 0;
    Asn asn_a = 0;
    Asn asn_b = 0;
    // Betweenness of the removed edge at removal time; absent for the random
    // strategy, which never ranks.
    std::optional<double> betweenness;
    double s_q = 0.0;  // post-strike largest-component fraction
    // Absent when the graph has no providers or no demand nodes.
    std::optional<GoIndexSnapshot> go_index;

    friend bool operator==(const Strike&, const Strike&) = default;
};

struct AttackTrace {
    std::size_t initial_node_count = 0;
    std::size_t initial_edge_count = 0;
    std::vector<Strike> strikes;

    friend bool operator==(const AttackTrace&, const AttackTrace&) = default;
};

}  // namespace backbone
