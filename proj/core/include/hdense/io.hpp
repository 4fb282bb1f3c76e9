#pragma once

#include "hdense/hypergraph.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hdense {

/// Bijection between external vertex labels and dense VertexIds.
class VertexLabelTable {
public:
    /// Returns the id of `label`, assigning the next free id on first sight.
    VertexId intern(std::string_view label);

    std::optional<VertexId> find(std::string_view label) const;
    const std::string& label(VertexId u) const { return labels_.at(u); }
    std::size_t size() const noexcept { return labels_.size(); }

    /// Identity table "0", "1", ... for graphs built in memory.
    static VertexLabelTable identity(std::size_t n);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
};

struct IngestOptions {
    /// Accept arbitrary tokens as labels instead of non-negative integers.
    bool string_labels = false;
};

struct IngestStats {
    std::size_t lines = 0;
    std::size_t comment_lines = 0;
    std::size_t blank_lines = 0;
    std::size_t duplicate_edges = 0;          // edges equal to an earlier edge
    std::size_t collapsed_memberships = 0;    // repeated vertices dropped within a line
};

struct LoadedHypergraph {
    Hypergraph graph;
    VertexLabelTable labels;
    IngestStats stats;
};

/// Reads the hyperedge-list text format: one hyperedge per line, tokens
/// separated by spaces, tabs or commas, '#' starts a comment line.
///
/// Integer labels are relabeled to 0..n-1 in ascending numeric order; string
/// labels in order of first appearance.
LoadedHypergraph load_hypergraph(std::istream& in, const IngestOptions& options = {});
LoadedHypergraph load_hypergraph_file(const std::filesystem::path& path, const IngestOptions& options = {});

/// One line per edge, ascending 0-based ids, single spaces, '\n' terminated.
void write_edge_list(const Hypergraph& h, std::ostream& out);

}  // namespace hdense
