#pragma once

#include <optional>
#include <vector>

#include "divstr/sigma_dag.hpp"

namespace divstr {

/// Length of the longest common subsequence of all input strings, via the
/// classic prefix-tuple dynamic program over the m-dimensional grid.
/// Lengths may differ; the strings must share one alphabet.
std::size_t lcs_length(const std::vector<TokenString>& strings);

/// Intermediate DAG whose edges may carry the epsilon mark (no label).
struct EpsilonEdge {
    VertexId from;
    std::optional<SymbolId> label;  // nullopt = epsilon
    VertexId to;
};

struct EpsilonDag {
    AlphabetPtr alphabet;
    std::size_t vertex_count = 0;
    VertexId source = 0;
    VertexId sink = 0;
    std::vector<EpsilonEdge> edges;
};

/// Removes epsilon edges by forward closure: every retained vertex connects
/// directly to the labeled successors reachable through epsilon chains, then
/// vertices off every source-sink path are dropped and equal-suffix vertices
/// merged. Requires the labeled source-sink paths to spell a non-empty
/// equi-length language; the result passes validate().
StringDag remove_epsilons(const EpsilonDag& input);

/// Builds a DAG representing exactly the set of all longest common
/// subsequences of the inputs. Only grid vertices on an optimal path are
/// materialized. Throws NoLcsError when the LCS length is zero.
StringDag build_lcs_dag(const std::vector<TokenString>& strings);

}  // namespace divstr
