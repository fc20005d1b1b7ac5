#include "divstr/sigma_dag.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace divstr {

std::span<const DagEdge> StringDag::out_edges(VertexId v) const {
    return {edges_.data() + out_off_[v], out_off_[v + 1] - out_off_[v]};
}

RawDag StringDag::to_raw() const {
    RawDag raw;
    raw.alphabet = alphabet_;
    raw.vertex_names = names_;
    raw.edges = edges_;
    raw.declared_r = r_;
    raw.declared_source = source_;
    raw.declared_sink = sink_;
    return raw;
}

StringDag validate(const RawDag& raw) {
    if (!raw.alphabet) throw ValidationError(DagDefect::BadEdge, "missing alphabet");
    const std::size_t n = raw.vertex_names.size();
    if (n == 0) throw ValidationError(DagDefect::NoVertices, "a DAG needs at least one vertex");

    {
        std::vector<std::string> names = raw.vertex_names;
        std::sort(names.begin(), names.end());
        auto dup = std::adjacent_find(names.begin(), names.end());
        if (dup != names.end()) {
            throw ValidationError(DagDefect::DuplicateVertexId, "'" + *dup + "'");
        }
    }

    std::vector<DagEdge> edges = raw.edges;
    for (const DagEdge& e : edges) {
        if (e.from >= n || e.to >= n) {
            throw ValidationError(DagDefect::BadEdge, "edge endpoint out of range");
        }
        if (e.label >= raw.alphabet->size()) {
            throw ValidationError(DagDefect::BadEdge, "edge label out of alphabet range");
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<std::uint32_t> indeg(n, 0), outdeg(n, 0);
    for (const DagEdge& e : edges) {
        ++outdeg[e.from];
        ++indeg[e.to];
    }

    // Kahn topological sort doubles as the cycle check.
    std::vector<std::size_t> out_off(n + 1, 0);
    for (const DagEdge& e : edges) ++out_off[e.from + 1];
    for (std::size_t i = 0; i < n; ++i) out_off[i + 1] += out_off[i];

    {
        std::vector<std::uint32_t> deg = indeg;
        std::vector<VertexId> queue;
        for (VertexId v = 0; v < n; ++v) {
            if (deg[v] == 0) queue.push_back(v);
        }
        std::size_t processed = 0;
        while (processed < queue.size()) {
            VertexId v = queue[processed++];
            for (std::size_t i = out_off[v]; i < out_off[v + 1]; ++i) {
                if (--deg[edges[i].to] == 0) queue.push_back(edges[i].to);
            }
        }
        if (processed < n) throw ValidationError(DagDefect::Cycle, "not a DAG");
    }

    std::vector<VertexId> sources, sinks;
    for (VertexId v = 0; v < n; ++v) {
        if (indeg[v] == 0) sources.push_back(v);
        if (outdeg[v] == 0) sinks.push_back(v);
    }
    if (sources.empty()) throw ValidationError(DagDefect::NoSource, "every vertex has an incoming edge");
    if (sources.size() > 1) {
        throw ValidationError(DagDefect::MultipleSources,
                              "'" + raw.vertex_names[sources[0]] + "' and '" + raw.vertex_names[sources[1]] + "'");
    }
    if (sinks.empty()) throw ValidationError(DagDefect::NoSink, "every vertex has an outgoing edge");
    if (sinks.size() > 1) {
        throw ValidationError(DagDefect::MultipleSinks,
                              "'" + raw.vertex_names[sinks[0]] + "' and '" + raw.vertex_names[sinks[1]] + "'");
    }
    VertexId source = sources[0];
    VertexId sink = sinks[0];
    if (raw.declared_source && *raw.declared_source != source) {
        throw ValidationError(DagDefect::DeclarationMismatch,
                              "declared source '" + raw.vertex_names[*raw.declared_source] + "' has incoming edges or is not the unique source");
    }
    if (raw.declared_sink && *raw.declared_sink != sink) {
        throw ValidationError(DagDefect::DeclarationMismatch,
                              "declared sink '" + raw.vertex_names[*raw.declared_sink] + "' has outgoing edges or is not the unique sink");
    }

    // Every vertex must be reachable from the source and reach the sink.
    {
        std::vector<char> fwd(n, 0), bwd(n, 0);
        std::vector<VertexId> stack{source};
        fwd[source] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (std::size_t i = out_off[v]; i < out_off[v + 1]; ++i) {
                VertexId w = edges[i].to;
                if (!fwd[w]) {
                    fwd[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::vector<std::vector<VertexId>> preds(n);
        for (const DagEdge& e : edges) preds[e.to].push_back(e.from);
        stack.assign(1, sink);
        bwd[sink] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId p : preds[v]) {
                if (!bwd[p]) {
                    bwd[p] = 1;
                    stack.push_back(p);
                }
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            if (!fwd[v] || !bwd[v]) {
                throw ValidationError(DagDefect::OffPathVertex, "'" + raw.vertex_names[v] + "'");
            }
        }
    }

    // All paths from the source to a vertex must have one length.
    std::vector<std::int64_t> depth(n, -1);
    depth[source] = 0;
    {
        std::vector<std::uint32_t> deg = indeg;
        std::vector<VertexId> queue{source};
        std::size_t head = 0;
        while (head < queue.size()) {
            VertexId v = queue[head++];
            for (std::size_t i = out_off[v]; i < out_off[v + 1]; ++i) {
                VertexId w = edges[i].to;
                if (depth[w] == -1) {
                    depth[w] = depth[v] + 1;
                } else if (depth[w] != depth[v] + 1) {
                    throw ValidationError(DagDefect::InconsistentDepth,
                                          "vertex '" + raw.vertex_names[w] + "' is reached at depths " +
                                              std::to_string(depth[w]) + " and " + std::to_string(depth[v] + 1));
                }
                if (--deg[w] == 0) queue.push_back(w);
            }
        }
    }

    std::size_t r = static_cast<std::size_t>(depth[sink]);
    if (raw.declared_r && *raw.declared_r != r) {
        throw ValidationError(DagDefect::LengthMismatch,
                              "declared r=" + std::to_string(*raw.declared_r) + " but sink depth is " + std::to_string(r));
    }

    StringDag dag;
    dag.alphabet_ = raw.alphabet;
    dag.r_ = r;
    dag.names_ = raw.vertex_names;
    dag.source_ = source;
    dag.sink_ = sink;
    dag.edges_ = std::move(edges);
    dag.out_off_ = std::move(out_off);
    dag.depth_.resize(n);
    dag.layers_.assign(r + 1, {});
    for (VertexId v = 0; v < n; ++v) {
        dag.depth_[v] = static_cast<std::uint32_t>(depth[v]);
        dag.layers_[dag.depth_[v]].push_back(v);
    }
    return dag;
}

StringDag dag_from_strings(const StringSet& set) {
    if (set.r() == 0) throw InvalidInputError("dag_from_strings requires strings of length at least 1");
    const std::size_t r = set.r();

    // Trie over the members; depth-r nodes all collapse into one sink.
    struct Node {
        std::map<SymbolId, std::uint32_t> children;
    };
    std::vector<Node> trie(1);
    std::vector<std::uint32_t> trie_depth{0};
    for (const TokenString& s : set.members()) {
        std::uint32_t cur = 0;
        for (std::size_t d = 0; d < r; ++d) {
            SymbolId c = s[d];
            auto it = trie[cur].children.find(c);
            if (it == trie[cur].children.end()) {
                std::uint32_t next = static_cast<std::uint32_t>(trie.size());
                trie[cur].children.emplace(c, next);
                trie.push_back({});
                trie_depth.push_back(static_cast<std::uint32_t>(d + 1));
                cur = next;
            } else {
                cur = it->second;
            }
        }
    }

    RawDag raw;
    raw.alphabet = set.alphabet();
    raw.declared_r = r;
    std::vector<VertexId> remap(trie.size());
    VertexId next_id = 0;
    VertexId sink = 0;
    bool sink_assigned = false;
    for (std::uint32_t t = 0; t < trie.size(); ++t) {
        if (trie_depth[t] == r) {
            if (!sink_assigned) {
                sink = next_id++;
                raw.vertex_names.push_back("t");
                sink_assigned = true;
            }
            remap[t] = sink;
        } else {
            remap[t] = next_id++;
            raw.vertex_names.push_back(t == 0 ? "s" : "v" + std::to_string(remap[t]));
        }
    }
    for (std::uint32_t t = 0; t < trie.size(); ++t) {
        for (auto [label, child] : trie[t].children) {
            raw.edges.push_back({remap[t], label, remap[child]});
        }
    }
    raw.declared_source = remap[0];
    raw.declared_sink = sink;
    return validate(raw);
}

namespace {

// Lexicographic DFS over the on-the-fly determinization of the DAG: a state
// is the set of vertices reachable by one spelled prefix, so every distinct
// string is produced exactly once even when several paths spell it.
struct Enumerator {
    const StringDag& dag;
    std::size_t limit;
    LanguageSample out;
    std::vector<SymbolId> prefix;

    bool visit(const std::vector<VertexId>& state, std::size_t depth) {
        if (depth == dag.r()) {
            if (out.strings.size() == limit) {
                out.truncated = true;
                return false;
            }
            out.strings.emplace_back(dag.alphabet(), prefix);
            return true;
        }
        std::map<SymbolId, std::vector<VertexId>> next;
        for (VertexId v : state) {
            for (const DagEdge& e : dag.out_edges(v)) next[e.label].push_back(e.to);
        }
        for (auto& [label, targets] : next) {
            std::sort(targets.begin(), targets.end());
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            prefix.push_back(label);
            bool keep_going = visit(targets, depth + 1);
            prefix.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

LanguageSample enumerate_language(const StringDag& dag, std::size_t limit) {
    if (limit == 0) throw InvalidInputError("enumeration limit must be positive");
    Enumerator e{dag, limit, {}, {}};
    e.visit({dag.source()}, 0);
    return std::move(e.out);
}

}  // namespace divstr
