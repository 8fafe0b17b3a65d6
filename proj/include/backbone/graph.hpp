#pragma once

// Undirected simple graph of autonomous systems with labeled peering edges.
// Graphs are immutable values: edge removal returns a new graph, so an attack
// loop can hold pre- and post-strike states side by side. All free functions
// here are pure and safe to call from concurrent readers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace backbone {

using Asn = std::uint32_t;     // autonomous system number, >= 1
using EdgeId = std::uint32_t;  // assigned densely at construction, stable under removal

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Bad input data or files. Mapped to CLI exit code 1.
struct InputError : Error {
    using Error::Error;
};
// Bad requested parameters. Mapped to CLI exit code 2.
struct ConfigError : Error {
    using Error::Error;
};

// Origin rule of a peering edge. An edge carries one label per rule that
// produced it; rules landing on the same AS pair merge into one record.
enum class EdgeLabel : std::uint8_t {
    PublicPeering = 1u << 0,   // co-members of an IXP
    PrivatePeering = 1u << 1,  // co-members of a facility
    DirectLink = 1u << 2,      // physically linked
};

class LabelSet {
public:
    constexpr LabelSet() = default;
    constexpr LabelSet(EdgeLabel label) : bits_(static_cast<std::uint8_t>(label)) {}

    constexpr LabelSet& insert(EdgeLabel label) {
        bits_ |= static_cast<std::uint8_t>(label);
        return *this;
    }
    constexpr LabelSet& merge(LabelSet other) {
        bits_ |= other.bits_;
        return *this;
    }
    constexpr bool contains(EdgeLabel label) const {
        return (bits_ & static_cast<std::uint8_t>(label)) != 0;
    }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const {
        return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
    }

    friend constexpr bool operator==(LabelSet, LabelSet) = default;

private:
    std::uint8_t bits_ = 0;
};

struct Edge {
    EdgeId id = 0;
    Asn a = 0;  // canonical: a < b
    Asn b = 0;
    LabelSet labels;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Node and provider sets are kept sorted ascending; edges sorted by id.
// Invariants enforced at construction: ASNs >= 1, no self-loops, at most one
// edge per node pair, canonical endpoint order, unique edge ids, providers
// a subset of the nodes.
class PeeringGraph {
public:
    PeeringGraph() = default;

    PeeringGraph(std::vector<Asn> nodes, std::vector<Edge> edges,
                 std::vector<Asn> providers = {})
        : nodes_(std::move(nodes)),
          edges_(std::move(edges)),
          providers_(std::move(providers)) {
        normalize_and_check();
        build_adjacency();
    }

    // Convenience for fixtures: endpoints are added to the node set and ids
    // are assigned densely over the pairs sorted by (a, b).
    static PeeringGraph from_pairs(std::vector<Asn> nodes,
                                   std::vector<std::pair<Asn, Asn>> pairs,
                                   std::vector<Asn> providers = {},
                                   LabelSet labels = LabelSet(EdgeLabel::DirectLink)) {
        for (auto& [a, b] : pairs) {
            if (a > b) std::swap(a, b);
            nodes.push_back(a);
            nodes.push_back(b);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        std::vector<Edge> edges;
        edges.reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i)
            edges.push_back(Edge{static_cast<EdgeId>(i), pairs[i].first,
                                 pairs[i].second, labels});
        return PeeringGraph(std::move(nodes), std::move(edges), std::move(providers));
    }

    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Asn>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Asn>& providers() const { return providers_; }

    bool has_node(Asn asn) const {
        return std::binary_search(nodes_.begin(), nodes_.end(), asn);
    }
    bool is_provider(Asn asn) const {
        return std::binary_search(providers_.begin(), providers_.end(), asn);
    }

    // Dense node index in [0, node_count), following ascending ASN order.
    std::uint32_t index_of(Asn asn) const {
        auto it = std::lower_bound(nodes_.begin(), nodes_.end(), asn);
        if (it == nodes_.end() || *it != asn)
            throw InputError("unknown source ASN " + std::to_string(asn));
        return static_cast<std::uint32_t>(it - nodes_.begin());
    }
    Asn asn_at(std::uint32_t index) const { return nodes_[index]; }

    bool has_edge(EdgeId id) const { return find_edge(id) != edges_.size(); }

    const Edge& edge(EdgeId id) const {
        std::size_t pos = find_edge(id);
        if (pos == edges_.size())
            throw InputError("no such edge: id " + std::to_string(id));
        return edges_[pos];
    }

    struct Neighbor {
        std::uint32_t node;     // dense index of the far endpoint
        std::uint32_t edge_pos; // position of the edge in edges()
    };
    const std::vector<Neighbor>& neighbors(std::uint32_t index) const {
        return adjacency_[index];
    }

    friend bool operator==(const PeeringGraph& lhs, const PeeringGraph& rhs) {
        return lhs.nodes_ == rhs.nodes_ && lhs.edges_ == rhs.edges_ &&
               lhs.providers_ == rhs.providers_;
    }

private:
    std::size_t find_edge(EdgeId id) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, EdgeId v) { return e.id < v; });
        if (it == edges_.end() || it->id != id) return edges_.size();
        return static_cast<std::size_t>(it - edges_.begin());
    }

    void normalize_and_check() {
        std::sort(nodes_.begin(), nodes_.end());
        nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
        if (!nodes_.empty() && nodes_.front() == 0)
            throw InputError("ASN must be a positive integer");

        std::sort(providers_.begin(), providers_.end());
        providers_.erase(std::unique(providers_.begin(), providers_.end()),
                         providers_.end());
        for (Asn p : providers_)
            if (!has_node(p))
                throw InputError("provider ASN " + std::to_string(p) +
                                 " not in node set");

        if (!std::is_sorted(edges_.begin(), edges_.end(),
                            [](const Edge& x, const Edge& y) { return x.id < y.id; }))
            std::sort(edges_.begin(), edges_.end(),
                      [](const Edge& x, const Edge& y) { return x.id < y.id; });

        std::vector<std::pair<Asn, Asn>> seen;
        seen.reserve(edges_.size());
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            if (i > 0 && edges_[i - 1].id == e.id)
                throw InputError("duplicate edge id " + std::to_string(e.id));
            if (e.a == e.b)
                throw InputError("self-loop on ASN " + std::to_string(e.a));
            if (e.a > e.b)
                throw InputError("edge endpoints not in canonical order: " +
                                 std::to_string(e.a) + "," + std::to_string(e.b));
            if (!has_node(e.a) || !has_node(e.b))
                throw InputError("edge endpoint not in node set: " +
                                 std::to_string(e.a) + "," + std::to_string(e.b));
            if (e.labels.empty())
                throw InputError("edge without labels: id " + std::to_string(e.id));
            seen.emplace_back(e.a, e.b);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw InputError("parallel edges between one ASN pair");
    }

    void build_adjacency() {
        adjacency_.assign(nodes_.size(), {});
        for (std::size_t pos = 0; pos < edges_.size(); ++pos) {
            std::uint32_t ia = index_of(edges_[pos].a);
            std::uint32_t ib = index_of(edges_[pos].b);
            adjacency_[ia].push_back({ib, static_cast<std::uint32_t>(pos)});
            adjacency_[ib].push_back({ia, static_cast<std::uint32_t>(pos)});
        }
    }

    std::vector<Asn> nodes_;
    std::vector<Edge> edges_;
    std::vector<Asn> providers_;
    std::vector<std::vector<Neighbor>> adjacency_;
};

// Partition of the node set into connected components. Components are ordered
// by (size descending, smallest ASN ascending); members ascend within each.
inline std::vector<std::vector<Asn>> connected_components(const PeeringGraph& graph) {
    const std::size_t n = graph.node_count();
    std::vector<std::vector<Asn>> components;
    std::vector<bool> visited(n, false);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        visited[start] = true;
        queue.assign(1, start);
        std::vector<Asn> members;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t v = queue[head];
            members.push_back(graph.asn_at(v));
            for (const auto& nb : graph.neighbors(v)) {
                if (!visited[nb.node]) {
                    visited[nb.node] = true;
                    queue.push_back(nb.node);
                }
            }
        }
        std::sort(members.begin(), members.end());
        components.push_back(std::move(members));
    }
    std::sort(components.begin(), components.end(),
              [](const std::vector<Asn>& x, const std::vector<Asn>& y) {
                  if (x.size() != y.size()) return x.size() > y.size();
                  return x.front() < y.front();
              });
    return components;
}

// |largest component| / |nodes|.
inline double largest_component_fraction(const PeeringGraph& graph) {
    if (graph.node_count() == 0) throw InputError("empty graph");
    auto components = connected_components(graph);
    return static_cast<double>(components.front().size()) /
           static_cast<double>(graph.node_count());
}

// degree -> node count. A node's degree counts incident edge records; labels
// do not multiply it.
inline std::map<std::size_t, std::size_t> degree_distribution(const PeeringGraph& graph) {
    std::map<std::size_t, std::size_t> histogram;
    for (std::uint32_t v = 0; v < graph.node_count(); ++v)
        ++histogram[graph.neighbors(v).size()];
    return histogram;
}

// Value-semantics removal: all nodes are retained, so disconnected ASs keep
// counting toward component fractions.
inline PeeringGraph remove_edge(const PeeringGraph& graph, EdgeId id) {
    if (!graph.has_edge(id))
        throw InputError("no such edge: id " + std::to_string(id));
    std::vector<Edge> edges;
    edges.reserve(graph.edge_count() - 1);
    for (const Edge& e : graph.edges())
        if (e.id != id) edges.push_back(e);
    return PeeringGraph(graph.nodes(), std::move(edges), graph.providers());
}

}  // namespace backbone
