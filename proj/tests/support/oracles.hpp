#pragma once

// Brute-force reference computations for the test suites. Everything here
// works straight off the edge list with its own BFS/DFS machinery, so it
// stays independent of the library code paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "backbone/graph.hpp"

namespace testsupport::oracle {

using backbone::Asn;
using backbone::EdgeId;
using backbone::PeeringGraph;

struct FlatGraph {
    std::vector<Asn> nodes;  // ascending
    std::map<Asn, std::vector<std::pair<Asn, EdgeId>>> adjacency;

    static FlatGraph of(const PeeringGraph& graph) {
        FlatGraph flat;
        flat.nodes = graph.nodes();
        for (Asn asn : flat.nodes) flat.adjacency[asn];
        for (const auto& e : graph.edges()) {
            flat.adjacency[e.a].emplace_back(e.b, e.id);
            flat.adjacency[e.b].emplace_back(e.a, e.id);
        }
        return flat;
    }
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

inline std::map<Asn, int> bfs(const FlatGraph& graph, Asn source) {
    std::map<Asn, int> dist;
    for (Asn asn : graph.nodes) dist[asn] = kUnreachable;
    dist[source] = 0;
    std::vector<Asn> queue{source};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Asn v = queue[head];
        for (const auto& [w, id] : graph.adjacency.at(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

namespace detail {

// Enumerates every path from `v` to `target` of exactly `remaining` further
// hops, tallying sigma and per-edge crossings.
inline void enumerate_paths(const FlatGraph& graph, Asn v, Asn target, int remaining,
                            std::vector<EdgeId>& path, std::map<Asn, bool>& visited,
                            std::size_t& sigma, std::map<EdgeId, std::size_t>& crossings) {
    if (remaining == 0) {
        if (v == target) {
            ++sigma;
            for (EdgeId id : path) ++crossings[id];
        }
        return;
    }
    for (const auto& [w, id] : graph.adjacency.at(v)) {
        if (visited[w]) continue;
        visited[w] = true;
        path.push_back(id);
        enumerate_paths(graph, w, target, remaining - 1, path, visited, sigma, crossings);
        path.pop_back();
        visited[w] = false;
    }
}

}  // namespace detail

// Edge betweenness by explicit shortest-path enumeration: for every unordered
// pair the BFS distance fixes the path length, a depth-limited DFS lists every
// path of that length, and each edge collects crossings/sigma.
inline std::map<EdgeId, double> edge_betweenness(const PeeringGraph& graph) {
    FlatGraph flat = FlatGraph::of(graph);
    std::map<EdgeId, double> scores;
    for (const auto& e : graph.edges()) scores[e.id] = 0.0;

    for (std::size_t i = 0; i < flat.nodes.size(); ++i) {
        Asn s = flat.nodes[i];
        auto dist = bfs(flat, s);
        for (std::size_t j = i + 1; j < flat.nodes.size(); ++j) {
            Asn t = flat.nodes[j];
            if (dist[t] == kUnreachable) continue;
            std::size_t sigma = 0;
            std::map<EdgeId, std::size_t> crossings;
            std::vector<EdgeId> path;
            std::map<Asn, bool> visited;
            visited[s] = true;
            detail::enumerate_paths(flat, s, t, dist[t], path, visited, sigma, crossings);
            for (const auto& [id, count] : crossings)
                scores[id] += static_cast<double>(count) / static_cast<double>(sigma);
        }
    }
    return scores;
}

// Sum of hop distances over connected unordered pairs.
inline double pair_distance_sum(const PeeringGraph& graph) {
    FlatGraph flat = FlatGraph::of(graph);
    double sum = 0.0;
    for (std::size_t i = 0; i < flat.nodes.size(); ++i) {
        auto dist = bfs(flat, flat.nodes[i]);
        for (std::size_t j = i + 1; j < flat.nodes.size(); ++j)
            if (dist[flat.nodes[j]] != kUnreachable)
                sum += static_cast<double>(dist[flat.nodes[j]]);
    }
    return sum;
}

inline double lcc_fraction(const PeeringGraph& graph) {
    FlatGraph flat = FlatGraph::of(graph);
    std::map<Asn, bool> seen;
    std::size_t best = 0;
    for (Asn start : flat.nodes) {
        if (seen[start]) continue;
        std::size_t size = 0;
        auto dist = bfs(flat, start);
        for (Asn v : flat.nodes)
            if (dist[v] != kUnreachable) {
                seen[v] = true;
                ++size;
            }
        best = std::max(best, size);
    }
    return static_cast<double>(best) / static_cast<double>(flat.nodes.size());
}

struct GoValues {
    double sar = 0.0;
    std::size_t netcon = 0;
    double netcon_fraction = 0.0;
    double bde = 0.0;
    double ade = 0.0;
};

// The four supply metrics from an all-pairs BFS matrix.
inline GoValues go_metrics(const PeeringGraph& graph) {
    FlatGraph flat = FlatGraph::of(graph);
    const auto& providers = graph.providers();
    std::map<Asn, std::map<Asn, int>> dist;
    for (Asn p : providers) dist[p] = bfs(flat, p);

    std::vector<Asn> demand;
    for (Asn v : flat.nodes)
        if (!std::binary_search(providers.begin(), providers.end(), v))
            demand.push_back(v);

    GoValues values;

    std::size_t reached = 0;
    for (Asn v : demand)
        for (Asn p : providers)
            if (dist[p][v] != kUnreachable) {
                ++reached;
                break;
            }
    values.sar = static_cast<double>(reached) / static_cast<double>(demand.size());

    std::size_t netcon = 0;
    for (Asn p : providers) {
        std::size_t size = 0;
        for (Asn v : flat.nodes)
            if (dist[p][v] != kUnreachable) ++size;
        netcon = std::max(netcon, size);
    }
    values.netcon = netcon;
    values.netcon_fraction =
        static_cast<double>(netcon) / static_cast<double>(flat.nodes.size());

    double nearest_sum = 0.0;
    std::size_t nearest_count = 0;
    for (Asn v : demand) {
        int nearest = kUnreachable;
        for (Asn p : providers) nearest = std::min(nearest, dist[p][v]);
        if (nearest != kUnreachable) {
            nearest_sum += static_cast<double>(nearest);
            ++nearest_count;
        }
    }
    values.bde = nearest_count == 0
                     ? 0.0
                     : 1.0 / (nearest_sum / static_cast<double>(nearest_count));

    double total = 0.0;
    for (Asn v : demand) {
        double node_sum = 0.0;
        for (Asn p : providers)
            if (dist[p][v] != kUnreachable && dist[p][v] > 0)
                node_sum += 1.0 / static_cast<double>(dist[p][v]);
        total += node_sum;
    }
    values.ade = total / static_cast<double>(demand.size());

    return values;
}

}  // namespace testsupport::oracle
