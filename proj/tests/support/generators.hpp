#pragma once

// Seeded random-graph fixtures and filesystem helpers for the test suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "backbone/graph.hpp"

namespace testsupport {

using backbone::Asn;
using backbone::PeeringGraph;

// G(n, p) with ASNs 1..n; the first `provider_count` of a shuffled node order
// become providers.
inline PeeringGraph gnp(std::mt19937_64& rng, std::uint32_t n, double p,
                        std::size_t provider_count = 0) {
    std::vector<Asn> nodes;
    for (std::uint32_t v = 1; v <= n; ++v) nodes.push_back(v);
    std::vector<std::pair<Asn, Asn>> pairs;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::uint32_t a = 1; a <= n; ++a)
        for (std::uint32_t b = a + 1; b <= n; ++b)
            if (coin(rng) < p) pairs.emplace_back(a, b);

    std::vector<Asn> shuffled = nodes;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Asn> providers(shuffled.begin(),
                               shuffled.begin() + static_cast<long>(provider_count));
    return PeeringGraph::from_pairs(std::move(nodes), std::move(pairs),
                                    std::move(providers));
}

// Preferential attachment: clique on the first m+1 nodes, then every new node
// attaches to m distinct existing nodes drawn proportionally to degree.
inline PeeringGraph barabasi_albert(std::uint64_t seed, std::uint32_t n,
                                    std::uint32_t m,
                                    std::size_t provider_count = 0) {
    if (n < m + 1) throw std::invalid_argument("barabasi_albert: n too small");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Asn, Asn>> pairs;
    std::vector<Asn> bag;  // one entry per edge endpoint
    for (std::uint32_t a = 1; a <= m + 1; ++a)
        for (std::uint32_t b = a + 1; b <= m + 1; ++b) {
            pairs.emplace_back(a, b);
            bag.push_back(a);
            bag.push_back(b);
        }
    for (std::uint32_t v = m + 2; v <= n; ++v) {
        std::vector<Asn> targets;
        while (targets.size() < m) {
            std::uniform_int_distribution<std::size_t> pick(0, bag.size() - 1);
            Asn candidate = bag[pick(rng)];
            if (std::find(targets.begin(), targets.end(), candidate) == targets.end())
                targets.push_back(candidate);
        }
        for (Asn t : targets) {
            pairs.emplace_back(std::min<Asn>(t, v), std::max<Asn>(t, v));
            bag.push_back(t);
            bag.push_back(v);
        }
    }
    std::vector<Asn> nodes;
    for (std::uint32_t v = 1; v <= n; ++v) nodes.push_back(v);
    std::vector<Asn> providers;
    for (std::uint32_t v = 1; v <= provider_count; ++v) providers.push_back(v);
    return PeeringGraph::from_pairs(std::move(nodes), std::move(pairs),
                                    std::move(providers));
}

struct TempDir {
    std::filesystem::path path;

    TempDir() {
        std::string templ =
            (std::filesystem::temp_directory_path() / "backbone-test-XXXXXX").string();
        std::vector<char> buffer(templ.begin(), templ.end());
        buffer.push_back('\0');
        if (mkdtemp(buffer.data()) == nullptr)
            throw std::runtime_error("mkdtemp failed");
        path = buffer.data();
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const { return path / name; }
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot write " + path.string());
    stream << content;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

// Writes a graph as the four-file CSV fixture, representing every edge as a
// direct link. Isolated nodes cannot be expressed and are dropped on re-read.
struct FixturePaths {
    std::filesystem::path ixp, facility, links, providers;
};

inline FixturePaths write_links_fixture(const PeeringGraph& graph,
                                        const std::filesystem::path& dir) {
    FixturePaths paths{dir / "ixp.csv", dir / "facility.csv", dir / "links.csv",
                       dir / "providers.csv"};
    write_file(paths.ixp, "asn,ixp_id\n");
    write_file(paths.facility, "asn,facility_id\n");
    std::string links = "asn_a,asn_b\n";
    for (const auto& e : graph.edges())
        links += std::to_string(e.a) + "," + std::to_string(e.b) + "\n";
    write_file(paths.links, links);
    std::string providers = "asn\n";
    for (Asn p : graph.providers()) providers += std::to_string(p) + "\n";
    write_file(paths.providers, providers);
    return paths;
}

}  // namespace testsupport
