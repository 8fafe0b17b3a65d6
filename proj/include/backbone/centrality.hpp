#pragma once

// Exact edge betweenness centrality over unweighted shortest paths, using the
// dependency-accumulation scheme of Brandes, "A faster algorithm for
// betweenness centrality" (2001), adapted to edges.
//
// Convention: score(e) = sum over unordered node pairs {s,t} of
// sigma_st(e) / sigma_st. No normalization; any positive scaling preserves the
// attack ranking. Disconnected pairs contribute nothing.
//
// Determinism contract: sources are processed in ascending ASN order inside
// fixed-size blocks, and block partials are merged in ascending block order.
// The block size does not depend on the worker count, so scores are identical
// bit for bit for any number of workers.

#include <atomic>
#include <cstdint>
#include <map>
#include <thread>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

// Per-edge centrality values; every edge of the scored graph appears once.
class EdgeScore {
public:
    EdgeScore() = default;
    explicit EdgeScore(std::vector<std::pair<EdgeId, double>> entries)
        : entries_(std::move(entries)) {}

    double at(EdgeId id) const {
        auto it = std::lower_bound(
            entries_.begin(), entries_.end(), id,
            [](const std::pair<EdgeId, double>& e, EdgeId v) { return e.first < v; });
        if (it == entries_.end() || it->first != id)
            throw InputError("no such edge: id " + std::to_string(id));
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    const std::vector<std::pair<EdgeId, double>>& entries() const { return entries_; }

private:
    std::vector<std::pair<EdgeId, double>> entries_;  // sorted by edge id
};

namespace detail {

// Hop distances from one source over the dense node-index space; -1 marks
// unreachable. Shared by betweenness, the supply metrics and bfs_levels.
inline std::vector<std::int32_t> bfs_distances(const PeeringGraph& graph,
                                               std::uint32_t source_index) {
    std::vector<std::int32_t> dist(graph.node_count(), -1);
    std::vector<std::uint32_t> queue;
    dist[source_index] = 0;
    queue.push_back(source_index);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t v = queue[head];
        for (const auto& nb : graph.neighbors(v)) {
            if (dist[nb.node] < 0) {
                dist[nb.node] = dist[v] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

// Multi-source variant: distance to the nearest of the given sources.
inline std::vector<std::int32_t> bfs_distances_multi(
    const PeeringGraph& graph, const std::vector<std::uint32_t>& sources) {
    std::vector<std::int32_t> dist(graph.node_count(), -1);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s : sources) {
        if (dist[s] < 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t v = queue[head];
        for (const auto& nb : graph.neighbors(v)) {
            if (dist[nb.node] < 0) {
                dist[nb.node] = dist[v] + 1;
                queue.push_back(nb.node);
            }
        }
    }
    return dist;
}

struct BrandesScratch {
    std::vector<std::int32_t> dist;
    std::vector<double> sigma;  // shortest-path counts; double to avoid overflow
    std::vector<double> delta;
    std::vector<std::uint32_t> order;  // BFS visit order

    void reset(std::size_t n) {
        dist.assign(n, -1);
        sigma.assign(n, 0.0);
        delta.assign(n, 0.0);
        order.clear();
    }
};

// One source's dependency accumulation added into `acc`, indexed by edge
// position. Predecessor edges are walked in adjacency order, which is fixed
// at graph construction.
inline void accumulate_source(const PeeringGraph& graph, std::uint32_t source,
                              BrandesScratch& scratch, std::vector<double>& acc) {
    scratch.reset(graph.node_count());
    auto& dist = scratch.dist;
    auto& sigma = scratch.sigma;
    auto& delta = scratch.delta;
    auto& order = scratch.order;

    dist[source] = 0;
    sigma[source] = 1.0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::uint32_t v = order[head];
        for (const auto& nb : graph.neighbors(v)) {
            if (dist[nb.node] < 0) {
                dist[nb.node] = dist[v] + 1;
                order.push_back(nb.node);
            }
            if (dist[nb.node] == dist[v] + 1) sigma[nb.node] += sigma[v];
        }
    }

    for (std::size_t i = order.size(); i-- > 1;) {
        std::uint32_t w = order[i];
        const double coeff = (1.0 + delta[w]) / sigma[w];
        for (const auto& nb : graph.neighbors(w)) {
            if (dist[nb.node] + 1 == dist[w]) {
                const double share = sigma[nb.node] * coeff;
                acc[nb.edge_pos] += share;
                delta[nb.node] += share;
            }
        }
    }
}

// Sources per reduction block. Fixed so that the floating-point merge order
// is independent of the worker count.
inline constexpr std::uint32_t kSourceBlock = 32;

}  // namespace detail

// Hop distance from `source` to every reachable node; unreachable nodes are
// absent from the map.
inline std::map<Asn, std::uint32_t> bfs_levels(const PeeringGraph& graph, Asn source) {
    std::uint32_t source_index = graph.index_of(source);
    auto dist = detail::bfs_distances(graph, source_index);
    std::map<Asn, std::uint32_t> levels;
    for (std::uint32_t v = 0; v < graph.node_count(); ++v)
        if (dist[v] >= 0) levels[graph.asn_at(v)] = static_cast<std::uint32_t>(dist[v]);
    return levels;
}

inline EdgeScore edge_betweenness(const PeeringGraph& graph, unsigned workers = 1) {
    const std::uint32_t n = static_cast<std::uint32_t>(graph.node_count());
    const std::size_t m = graph.edge_count();
    const std::uint32_t blocks = (n + detail::kSourceBlock - 1) / detail::kSourceBlock;

    std::vector<std::vector<double>> partial(blocks);
    auto run_block = [&](std::uint32_t block, detail::BrandesScratch& scratch) {
        auto& acc = partial[block];
        acc.assign(m, 0.0);
        const std::uint32_t begin = block * detail::kSourceBlock;
        const std::uint32_t end = std::min(n, begin + detail::kSourceBlock);
        for (std::uint32_t s = begin; s < end; ++s)
            detail::accumulate_source(graph, s, scratch, acc);
    };

    unsigned concurrency = std::max(1u, workers);
    if (concurrency <= 1 || blocks <= 1) {
        detail::BrandesScratch scratch;
        for (std::uint32_t b = 0; b < blocks; ++b) run_block(b, scratch);
    } else {
        std::atomic<std::uint32_t> next{0};
        auto worker = [&] {
            detail::BrandesScratch scratch;
            for (std::uint32_t b = next.fetch_add(1); b < blocks;
                 b = next.fetch_add(1))
                run_block(b, scratch);
        };
        std::vector<std::thread> pool;
        unsigned spawned = std::min<unsigned>(concurrency, blocks);
        pool.reserve(spawned);
        for (unsigned t = 0; t < spawned; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge ascending so the rounding sequence matches the sequential run,
    // then halve: each unordered pair was visited from both endpoints.
    std::vector<double> total(m, 0.0);
    for (std::uint32_t b = 0; b < blocks; ++b)
        for (std::size_t e = 0; e < m; ++e) total[e] += partial[b][e];

    std::vector<std::pair<EdgeId, double>> entries;
    entries.reserve(m);
    for (std::size_t e = 0; e < m; ++e)
        entries.emplace_back(graph.edges()[e].id, 0.5 * total[e]);
    return EdgeScore(std::move(entries));
}

}  // namespace backbone
