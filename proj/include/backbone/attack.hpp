#pragma once

// Edge-removal attacks with a strike budget.
//
// Sequential betweenness re-ranks every surviving edge before each strike;
// simultaneous betweenness ranks once on the initial graph; the random
// baseline removes a uniformly random surviving edge per strike. Ties in the
// betweenness ranking break toward the lower edge id, which makes every trace
// reproducible. One run is a strictly sequential state machine; independent
// runs may execute concurrently.

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "backbone/centrality.hpp"
#include "backbone/graph.hpp"
#include "backbone/metrics.hpp"
#include "backbone/trace.hpp"

namespace backbone {

namespace detail {

// Unbiased draw from [0, bound) out of a 64-bit generator. Avoids the
// implementation-defined std::uniform_int_distribution so a seed pins the
// trace on every platform.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

inline void check_attack_args(const PeeringGraph& graph, std::size_t budget) {
    if (graph.node_count() == 0) throw InputError("empty graph");
    if (budget == 0) throw ConfigError("budget must be positive");
    if (budget > graph.edge_count()) throw ConfigError("budget exceeds edge count");
}

// Position in edges() of the highest-scoring edge, lowest id on ties. Scores
// line up with edges() by construction.
inline std::size_t argmax_edge(const EdgeScore& scores) {
    std::size_t best = 0;
    double best_score = scores.entries().front().second;
    for (std::size_t pos = 1; pos < scores.size(); ++pos) {
        double score = scores.entries()[pos].second;
        if (score > best_score) {
            best = pos;
            best_score = score;
        }
    }
    return best;
}

}  // namespace detail

// The top-`budget` edges of the initial ranking, descending score, ties
// toward the lower edge id.
inline std::vector<EdgeId> plan_simultaneous(const PeeringGraph& graph,
                                             std::size_t budget,
                                             unsigned workers = 1) {
    detail::check_attack_args(graph, budget);
    EdgeScore scores = edge_betweenness(graph, workers);
    std::vector<std::pair<EdgeId, double>> ranked(scores.begin(), scores.end());
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& x, const auto& y) {
                  if (x.second != y.second) return x.second > y.second;
                  return x.first < y.first;
              });
    std::vector<EdgeId> plan;
    plan.reserve(budget);
    for (std::size_t i = 0; i < budget; ++i) plan.push_back(ranked[i].first);
    return plan;
}

// Runs `budget` strikes and records, after each one, the removed edge, its
// score at removal time, the post-strike largest-component fraction and the
// post-strike supply snapshot (when the graph has providers and demand).
inline AttackTrace run_attack(const PeeringGraph& graph,
                              const AttackStrategy& strategy, std::size_t budget,
                              unsigned workers = 1) {
    detail::check_attack_args(graph, budget);
    if ((strategy.kind == AttackKind::RandomUniform) != strategy.seed.has_value())
        throw ConfigError(strategy.kind == AttackKind::RandomUniform
                              ? "random strategy requires a seed"
                              : "seed is only meaningful for the random strategy");

    AttackTrace trace;
    trace.initial_node_count = graph.node_count();
    trace.initial_edge_count = graph.edge_count();
    trace.strikes.reserve(budget);

    const bool track_supply =
        !graph.providers().empty() && detail::demand_count(graph) > 0;

    std::vector<EdgeId> plan;
    EdgeScore initial_scores;
    if (strategy.kind == AttackKind::BetweennessSimultaneous) {
        initial_scores = edge_betweenness(graph, workers);
        plan = plan_simultaneous(graph, budget, workers);
    }
    std::mt19937_64 rng(strategy.seed.value_or(0));

    PeeringGraph current = graph;
    for (std::uint32_t q = 1; q <= budget; ++q) {
        EdgeId victim = 0;
        std::optional<double> score;
        switch (strategy.kind) {
            case AttackKind::BetweennessSequential: {
                EdgeScore scores = edge_betweenness(current, workers);
                std::size_t pos = detail::argmax_edge(scores);
                victim = current.edges()[pos].id;
                score = scores.entries()[pos].second;
                break;
            }
            case AttackKind::BetweennessSimultaneous:
                victim = plan[q - 1];
                score = initial_scores.at(victim);
                break;
            case AttackKind::RandomUniform: {
                std::size_t pos = static_cast<std::size_t>(
                    detail::bounded_draw(rng, current.edge_count()));
                victim = current.edges()[pos].id;
                break;
            }
        }

        const Edge removed = current.edge(victim);
        current = remove_edge(current, victim);

        Strike strike;
        strike.index = q;
        strike.edge_id = removed.id;
        strike.asn_a = removed.a;
        strike.asn_b = removed.b;
        strike.betweenness = score;
        strike.s_q = largest_component_fraction(current);
        if (track_supply) strike.go_index = go_index(current);
        trace.strikes.push_back(strike);
    }
    return trace;
}

}  // namespace backbone
