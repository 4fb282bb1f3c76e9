#include "hdense/io.hpp"

#include "hdense/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>

namespace hdense {

VertexId VertexLabelTable::intern(std::string_view label) {
    auto key = std::string(label);
    auto it = ids_.find(key);
    if (it != ids_.end()) {
        return it->second;
    }
    const auto id = static_cast<VertexId>(labels_.size());
    labels_.push_back(key);
    ids_.emplace(std::move(key), id);
    return id;
}

std::optional<VertexId> VertexLabelTable::find(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexLabelTable VertexLabelTable::identity(std::size_t n) {
    VertexLabelTable table;
    for (std::size_t u = 0; u < n; ++u) {
        table.intern(std::to_string(u));
    }
    return table;
}

namespace {

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r' || c == '\v' || c == '\f';
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_separator(line[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && !is_separator(line[j])) {
            ++j;
        }
        if (j > i) {
            tokens.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return tokens;
}

std::uint64_t parse_integer(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

LoadedHypergraph load_hypergraph(std::istream& in, const IngestOptions& options) {
    LoadedHypergraph out;
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::vector<std::uint64_t>> raw_edges;  // integer mode, relabeled at the end

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        ++out.stats.lines;
        std::string_view view(line);
        auto first = std::find_if(view.begin(), view.end(), [](char c) { return !is_separator(c); });
        if (first == view.end()) {
            ++out.stats.blank_lines;
            continue;
        }
        if (*first == '#') {
            ++out.stats.comment_lines;
            continue;
        }
        auto tokens = tokenize(view);
        if (options.string_labels) {
            std::vector<VertexId> members;
            members.reserve(tokens.size());
            for (auto token : tokens) {
                members.push_back(out.labels.intern(token));
            }
            std::sort(members.begin(), members.end());
            auto last = std::unique(members.begin(), members.end());
            out.stats.collapsed_memberships += static_cast<std::size_t>(members.end() - last);
            members.erase(last, members.end());
            edges.push_back(std::move(members));
        } else {
            std::vector<std::uint64_t> members;
            members.reserve(tokens.size());
            for (auto token : tokens) {
                members.push_back(parse_integer(token, line_no));
            }
            std::sort(members.begin(), members.end());
            auto last = std::unique(members.begin(), members.end());
            out.stats.collapsed_memberships += static_cast<std::size_t>(members.end() - last);
            members.erase(last, members.end());
            raw_edges.push_back(std::move(members));
        }
    }
    if (in.bad()) {
        throw Error("read error after line " + std::to_string(line_no));
    }

    if (!options.string_labels) {
        std::set<std::uint64_t> seen;
        for (const auto& members : raw_edges) {
            seen.insert(members.begin(), members.end());
        }
        if (seen.size() > static_cast<std::size_t>(kNoVertex)) {
            throw ParseError(line_no, "too many distinct vertices");
        }
        std::map<std::uint64_t, VertexId> ids;
        for (std::uint64_t label : seen) {
            ids.emplace(label, out.labels.intern(std::to_string(label)));
        }
        edges.reserve(raw_edges.size());
        for (const auto& members : raw_edges) {
            std::vector<VertexId> mapped;
            mapped.reserve(members.size());
            for (auto label : members) {
                mapped.push_back(ids.at(label));
            }
            edges.push_back(std::move(mapped));
        }
    }

    if (edges.empty()) {
        throw EmptyInputError("input contains no hyperedges");
    }

    {
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (edges[order[i]] == edges[order[i - 1]]) {
                ++out.stats.duplicate_edges;
            }
        }
    }

    out.graph = Hypergraph(out.labels.size(), std::move(edges));
    return out;
}

LoadedHypergraph load_hypergraph_file(const std::filesystem::path& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    return load_hypergraph(in, options);
}

void write_edge_list(const Hypergraph& h, std::ostream& out) {
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        bool first = true;
        for (VertexId u : h.edge(e)) {
            if (!first) {
                out << ' ';
            }
            out << u;
            first = false;
        }
        out << '\n';
    }
}

}  // namespace hdense
