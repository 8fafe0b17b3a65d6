#pragma once

// File-based ingestion of peering records and graph construction.
//
// Input is four CSV files (UTF-8, comma-separated, '#' comments, header row
// required on any file with data rows):
//   ixp.csv        asn,ixp_id
//   facility.csv   asn,facility_id
//   links.csv      asn_a,asn_b
//   providers.csv  asn
//
// Two ASs are connected iff they share an IXP (public peering), share a
// facility (private peering) or appear as a direct link; an IXP or facility
// with k members contributes the full k(k-1)/2 pairs. Rules landing on the
// same pair merge into one edge with the union of labels. Edge ids run
// 0..E-1 over the pairs sorted by (low ASN, high ASN), so shuffled input
// rows produce the identical graph.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

// De-duplicated, order-independent view of the raw input facts. All lists
// are sorted ascending.
struct PeeringRecordSet {
    std::vector<std::pair<Asn, std::string>> ixp_memberships;
    std::vector<std::pair<Asn, std::string>> facility_memberships;
    std::vector<std::pair<Asn, Asn>> direct_links;  // canonical low,high
    std::vector<Asn> providers;

    friend bool operator==(const PeeringRecordSet&, const PeeringRecordSet&) = default;
};

namespace detail {

inline std::string trim(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    std::size_t end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(std::string_view(line).substr(start)));
            break;
        }
        fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

inline std::string location(const std::filesystem::path& file, std::size_t line) {
    return file.string() + ": line " + std::to_string(line);
}

inline Asn parse_asn(const std::string& field, const std::filesystem::path& file,
                     std::size_t line) {
    if (field.empty())
        throw InputError(location(file, line) + ": empty asn field");
    if (field[0] == '-' || field == "0")
        throw InputError(location(file, line) + ": asn '" + field +
                         "' must be a positive integer");
    for (char c : field)
        if (c < '0' || c > '9')
            throw InputError(location(file, line) + ": invalid asn '" + field + "'");
    unsigned long long value = 0;
    try {
        value = std::stoull(field);
    } catch (const std::out_of_range&) {
        throw InputError(location(file, line) + ": asn '" + field + "' out of range");
    }
    if (value == 0 || value > 0xFFFFFFFFull)
        throw InputError(location(file, line) + ": asn '" + field + "' out of range");
    return static_cast<Asn>(value);
}

// Feeds data rows to `handler(fields, line_number)`. A file whose content is
// only comments or blank lines is an empty record list; any data requires the
// exact header first.
template <typename Handler>
void for_each_row(const std::filesystem::path& file, const std::string& header,
                  std::size_t column_count, Handler&& handler) {
    std::ifstream stream(file);
    if (!stream) throw InputError("cannot open " + file.string());
    std::string line;
    std::size_t line_number = 0;
    bool header_seen = false;
    while (std::getline(stream, line)) {
        ++line_number;
        std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto fields = split_fields(line);
        if (!header_seen) {
            if (split_fields(header) != fields)
                throw InputError(location(file, line_number) +
                                 ": expected header '" + header + "'");
            header_seen = true;
            continue;
        }
        if (fields.size() != column_count)
            throw InputError(location(file, line_number) + ": expected " +
                             std::to_string(column_count) + " fields, got " +
                             std::to_string(fields.size()));
        handler(fields, line_number);
    }
}

inline void sort_unique(std::vector<std::pair<Asn, std::string>>& list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

}  // namespace detail

// Parses the four record files. Row order never affects the result; duplicate
// rows collapse. Malformed rows report file, line number and offending field.
inline PeeringRecordSet parse_records(const std::filesystem::path& ixp_file,
                                      const std::filesystem::path& facility_file,
                                      const std::filesystem::path& links_file,
                                      const std::filesystem::path& providers_file) {
    PeeringRecordSet records;

    auto parse_memberships = [](const std::filesystem::path& file,
                                const std::string& header, const char* id_name,
                                std::vector<std::pair<Asn, std::string>>& out) {
        detail::for_each_row(
            file, header, 2,
            [&](const std::vector<std::string>& fields, std::size_t line) {
                Asn asn = detail::parse_asn(fields[0], file, line);
                if (fields[1].empty())
                    throw InputError(detail::location(file, line) + ": empty " +
                                     id_name + " field");
                out.emplace_back(asn, fields[1]);
            });
    };

    parse_memberships(ixp_file, "asn,ixp_id", "ixp_id", records.ixp_memberships);
    parse_memberships(facility_file, "asn,facility_id", "facility_id",
                      records.facility_memberships);
    detail::for_each_row(
        links_file, "asn_a,asn_b", 2,
        [&](const std::vector<std::string>& fields, std::size_t line) {
            Asn a = detail::parse_asn(fields[0], links_file, line);
            Asn b = detail::parse_asn(fields[1], links_file, line);
            if (a == b)
                throw InputError(links_file.string() + ": self-link at line " +
                                 std::to_string(line) + " (asn " +
                                 std::to_string(a) + ")");
            if (a > b) std::swap(a, b);
            records.direct_links.emplace_back(a, b);
        });
    detail::for_each_row(
        providers_file, "asn", 1,
        [&](const std::vector<std::string>& fields, std::size_t line) {
            records.providers.push_back(
                detail::parse_asn(fields[0], providers_file, line));
        });

    detail::sort_unique(records.ixp_memberships);
    detail::sort_unique(records.facility_memberships);
    std::sort(records.direct_links.begin(), records.direct_links.end());
    records.direct_links.erase(
        std::unique(records.direct_links.begin(), records.direct_links.end()),
        records.direct_links.end());
    std::sort(records.providers.begin(), records.providers.end());
    records.providers.erase(
        std::unique(records.providers.begin(), records.providers.end()),
        records.providers.end());
    return records;
}

// Builds the peering graph from a record set. The node set is every ASN seen
// in a membership or link; a provider ASN seen nowhere else is rejected as an
// operator error rather than added as an isolated node.
inline PeeringGraph build_graph(const PeeringRecordSet& records) {
    std::vector<Asn> nodes;
    for (const auto& [asn, id] : records.ixp_memberships) nodes.push_back(asn);
    for (const auto& [asn, id] : records.facility_memberships) nodes.push_back(asn);
    for (const auto& [a, b] : records.direct_links) {
        nodes.push_back(a);
        nodes.push_back(b);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    for (Asn provider : records.providers)
        if (!std::binary_search(nodes.begin(), nodes.end(), provider))
            throw InputError("unknown provider ASN " + std::to_string(provider));

    std::map<std::pair<Asn, Asn>, LabelSet> pairs;
    auto expand_cliques = [&pairs](const std::vector<std::pair<Asn, std::string>>& list,
                                   EdgeLabel label) {
        std::map<std::string, std::vector<Asn>> groups;
        for (const auto& [asn, id] : list) groups[id].push_back(asn);
        for (const auto& [id, members] : groups)
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    pairs[{members[i], members[j]}].insert(label);
    };
    expand_cliques(records.ixp_memberships, EdgeLabel::PublicPeering);
    expand_cliques(records.facility_memberships, EdgeLabel::PrivatePeering);
    for (const auto& link : records.direct_links)
        pairs[link].insert(EdgeLabel::DirectLink);

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [pair, labels] : pairs)
        edges.push_back(Edge{static_cast<EdgeId>(edges.size()), pair.first,
                             pair.second, labels});
    return PeeringGraph(std::move(nodes), std::move(edges), records.providers);
}

}  // namespace backbone
