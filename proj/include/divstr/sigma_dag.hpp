#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "divstr/strings.hpp"

namespace divstr {

using VertexId = std::uint32_t;

struct DagEdge {
    VertexId from;
    SymbolId label;
    VertexId to;

    friend bool operator==(const DagEdge&, const DagEdge&) = default;
    friend auto operator<=>(const DagEdge&, const DagEdge&) = default;
};

/// Mutable construction surface for a string DAG, as produced by parsers and
/// builders. Feed it to validate() to obtain a usable StringDag.
struct RawDag {
    AlphabetPtr alphabet;
    std::vector<std::string> vertex_names;  // index is the VertexId
    std::vector<DagEdge> edges;
    std::optional<std::size_t> declared_r;
    std::optional<VertexId> declared_source;
    std::optional<VertexId> declared_sink;
};

/// Edge-labeled DAG with a unique source and sink whose source-to-sink paths
/// spell a set of strings of one common length r. Instances only come out of
/// validate(), so solvers can rely on the structural invariants: acyclic,
/// every vertex on some source-sink path, and a well-defined depth per vertex
/// partitioning the vertices into layers 0..r.
class StringDag {
public:
    const AlphabetPtr& alphabet() const { return alphabet_; }
    std::size_t r() const { return r_; }
    std::size_t vertex_count() const { return names_.size(); }
    /// size(G): the number of labeled edges.
    std::size_t edge_count() const { return edges_.size(); }
    VertexId source() const { return source_; }
    VertexId sink() const { return sink_; }

    std::uint32_t depth(VertexId v) const { return depth_[v]; }
    const std::vector<std::uint32_t>& depths() const { return depth_; }
    /// Vertices grouped by depth; layers()[0] = {source}, layers()[r] = {sink}.
    const std::vector<std::vector<VertexId>>& layers() const { return layers_; }

    const std::vector<DagEdge>& edges() const { return edges_; }
    /// Out-edges of v, sorted by (label, target).
    std::span<const DagEdge> out_edges(VertexId v) const;

    const std::string& vertex_name(VertexId v) const { return names_[v]; }

    /// The components this DAG was validated from, for writers and round-trips.
    RawDag to_raw() const;

private:
    friend StringDag validate(const RawDag& raw);
    StringDag() = default;

    AlphabetPtr alphabet_;
    std::size_t r_ = 0;
    std::vector<std::string> names_;
    VertexId source_ = 0;
    VertexId sink_ = 0;
    std::vector<DagEdge> edges_;        // sorted by (from, label, to), deduplicated
    std::vector<std::size_t> out_off_;  // CSR offsets into edges_
    std::vector<std::uint32_t> depth_;
    std::vector<std::vector<VertexId>> layers_;
};

/// Checks all structural invariants and computes the depth labeling.
/// Throws ValidationError naming the violated property otherwise.
StringDag validate(const RawDag& raw);

/// Builds a trie over the members of L with all leaves merged into a single
/// sink. The result has at most sum-of-lengths edges and represents exactly L.
StringDag dag_from_strings(const StringSet& set);

struct LanguageSample {
    std::vector<TokenString> strings;  // distinct, lexicographic by symbol id
    bool truncated = false;            // set when the language exceeds the limit
};

/// Spells out the represented language in lexicographic order, stopping after
/// `limit` distinct strings. The language can be exponential in the DAG size,
/// hence the mandatory limit.
LanguageSample enumerate_language(const StringDag& dag, std::size_t limit);

}  // namespace divstr
