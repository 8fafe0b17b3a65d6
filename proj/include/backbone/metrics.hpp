#pragma once

// Robustness and supply-network metrics.
//
// R-index family: the mean of the largest-component fraction s(Q) over the
// strikes of an attack trace; r_n_index restricts the mean to the first n
// strikes. Supply metrics (SAR, NetCON, BDE, ADE) measure how well the
// non-provider ("demand") ASs still reach the designated provider ASs.
// Demand nodes exclude the providers themselves throughout.

#include <cstdint>
#include <utility>
#include <vector>

#include "backbone/centrality.hpp"
#include "backbone/graph.hpp"
#include "backbone/trace.hpp"

namespace backbone {

namespace detail {

inline std::vector<std::uint32_t> provider_indices(const PeeringGraph& graph) {
    if (graph.providers().empty()) throw InputError("provider set empty");
    std::vector<std::uint32_t> indices;
    indices.reserve(graph.providers().size());
    for (Asn p : graph.providers()) indices.push_back(graph.index_of(p));
    return indices;
}

inline std::size_t demand_count(const PeeringGraph& graph) {
    return graph.node_count() - graph.providers().size();
}

}  // namespace detail

// Mean of the first n per-strike s(Q) values.
inline double r_n_index(const AttackTrace& trace, std::size_t n) {
    if (n == 0) throw ConfigError("r_n_index needs n >= 1");
    if (n > trace.strikes.size())
        throw ConfigError("r_n_index: n exceeds trace length (" +
                          std::to_string(n) + " > " +
                          std::to_string(trace.strikes.size()) + ")");
    double sum = 0.0;
    for (std::size_t q = 0; q < n; ++q) sum += trace.strikes[q].s_q;
    return sum / static_cast<double>(n);
}

// Mean s(Q) over a complete trace (every edge struck). The divisor is the
// actual strike count, which keeps the value in [0,1] and equal to the area
// under the s(Q) curve.
inline double r_index(const AttackTrace& trace) {
    if (trace.strikes.empty() ||
        trace.strikes.size() != trace.initial_edge_count)
        throw ConfigError("r_index requires a complete trace; use r_n_index");
    return r_n_index(trace, trace.strikes.size());
}

struct RobustnessSeries {
    std::size_t n = 0;
    double r_n = 0.0;
    std::vector<double> s_values;  // s(1) .. s(n)
};

inline RobustnessSeries robustness_series(const AttackTrace& trace, std::size_t n) {
    RobustnessSeries series;
    series.n = n;
    series.r_n = r_n_index(trace, n);
    series.s_values.reserve(n);
    for (std::size_t q = 0; q < n; ++q)
        series.s_values.push_back(trace.strikes[q].s_q);
    return series;
}

// SAR: fraction of demand ASs with a path to at least one provider.
inline double supply_availability(const PeeringGraph& graph) {
    auto providers = detail::provider_indices(graph);
    if (detail::demand_count(graph) == 0) throw InputError("no demand nodes");
    auto dist = detail::bfs_distances_multi(graph, providers);
    std::size_t reached = 0;
    for (std::uint32_t v = 0; v < graph.node_count(); ++v)
        if (!graph.is_provider(graph.asn_at(v)) && dist[v] >= 0) ++reached;
    return static_cast<double>(reached) /
           static_cast<double>(detail::demand_count(graph));
}

// NetCON: size of the largest component that holds at least one provider,
// as a count and as a fraction of the node set.
inline std::pair<std::size_t, double> network_connectivity(const PeeringGraph& graph) {
    detail::provider_indices(graph);  // validates the provider set
    std::size_t best = 0;
    for (const auto& component : connected_components(graph)) {
        bool has_provider = false;
        for (Asn asn : component)
            if (graph.is_provider(asn)) {
                has_provider = true;
                break;
            }
        if (has_provider && component.size() > best) best = component.size();
    }
    return {best, static_cast<double>(best) /
                      static_cast<double>(graph.node_count())};
}

// BDE: reciprocal of the mean distance-to-nearest-provider among the demand
// nodes that still reach one; 0 when none does. Only the provider-side
// component is visible to this metric, so it can rise when a far-away subnet
// is cut off.
inline double best_delivery_efficiency(const PeeringGraph& graph) {
    auto providers = detail::provider_indices(graph);
    auto dist = detail::bfs_distances_multi(graph, providers);
    double sum = 0.0;
    std::size_t reached = 0;
    for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        if (graph.is_provider(graph.asn_at(v)) || dist[v] < 0) continue;
        sum += static_cast<double>(dist[v]);
        ++reached;
    }
    if (reached == 0) return 0.0;
    return 1.0 / (sum / static_cast<double>(reached));
}

// ADE: mean over demand nodes of the summed inverse hop distance to every
// provider (equal provider weights); unreachable pairs contribute 0. Ranges
// over [0, P] for P providers and, unlike BDE, sees disconnected subnets.
inline double average_delivery_efficiency(const PeeringGraph& graph) {
    auto providers = detail::provider_indices(graph);
    const std::size_t demand = detail::demand_count(graph);
    if (demand == 0) throw InputError("no demand nodes");

    std::vector<std::vector<std::int32_t>> dist_from;
    dist_from.reserve(providers.size());
    for (std::uint32_t p : providers)
        dist_from.push_back(detail::bfs_distances(graph, p));

    double total = 0.0;
    for (std::uint32_t v = 0; v < graph.node_count(); ++v) {
        if (graph.is_provider(graph.asn_at(v))) continue;
        double node_sum = 0.0;
        for (const auto& dist : dist_from)
            if (dist[v] > 0) node_sum += 1.0 / static_cast<double>(dist[v]);
        total += node_sum;
    }
    return total / static_cast<double>(demand);
}

// The four supply metrics bundled on one graph state.
inline GoIndexSnapshot go_index(const PeeringGraph& graph) {
    GoIndexSnapshot snapshot;
    snapshot.sar = supply_availability(graph);
    auto [count, fraction] = network_connectivity(graph);
    snapshot.netcon = count;
    snapshot.netcon_fraction = fraction;
    snapshot.bde = best_delivery_efficiency(graph);
    snapshot.ade = average_delivery_efficiency(graph);
    return snapshot;
}

}  // namespace backbone
