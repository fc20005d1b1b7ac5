#include "divstr/color_coding.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <random>

namespace divstr {

namespace {

constexpr std::size_t kMaxTrieVertices = 5'000'000;

}  // namespace

Coloring random_coloring(const Alphabet& alphabet, std::uint32_t num_colors, std::uint64_t seed) {
    if (num_colors == 0) throw InvalidInputError("a coloring needs at least one color");
    Coloring c;
    c.num_colors = num_colors;
    c.seed = seed;
    c.color_of.resize(alphabet.size());
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        c.color_of[i] = static_cast<std::uint32_t>(rng() % num_colors);
    }
    return c;
}

ColoredTrie build_colored_trie(const StringDag& dag, const Coloring& coloring) {
    if (coloring.color_of.size() != dag.alphabet()->size()) {
        throw InvalidInputError("coloring does not cover the DAG alphabet");
    }
    std::vector<std::string> color_tokens;
    color_tokens.reserve(coloring.num_colors);
    for (std::uint32_t c = 0; c < coloring.num_colors; ++c) {
        color_tokens.push_back(std::to_string(c));
    }
    AlphabetPtr color_alpha = make_alphabet(std::move(color_tokens));

    struct TrieNode {
        std::map<std::uint32_t, std::uint32_t> children;  // color -> node
        std::vector<VertexId> origins;
    };
    std::vector<TrieNode> nodes(1);
    nodes[0].origins = {dag.source()};
    std::vector<std::uint32_t> frontier{0};

    const std::size_t r = dag.r();
    for (std::size_t d = 0; d < r; ++d) {
        std::vector<std::uint32_t> next_frontier;
        for (std::uint32_t x : frontier) {
            for (VertexId v : nodes[x].origins) {
                for (const DagEdge& e : dag.out_edges(v)) {
                    std::uint32_t color = coloring.color_of[e.label];
                    auto it = nodes[x].children.find(color);
                    std::uint32_t y;
                    if (it == nodes[x].children.end()) {
                        y = static_cast<std::uint32_t>(nodes.size());
                        if (nodes.size() >= kMaxTrieVertices) {
                            throw BudgetError("colored trie exceeded the vertex budget");
                        }
                        nodes[x].children.emplace(color, y);
                        nodes.push_back({});
                        next_frontier.push_back(y);
                    } else {
                        y = it->second;
                    }
                    nodes[y].origins.push_back(e.to);
                }
            }
        }
        for (std::uint32_t y : next_frontier) {
            auto& o = nodes[y].origins;
            std::sort(o.begin(), o.end());
            o.erase(std::unique(o.begin(), o.end()), o.end());
        }
        frontier = std::move(next_frontier);
    }

    // Depth-r leaves merge into one sink whose origin set is their union.
    RawDag raw;
    raw.alphabet = color_alpha;
    raw.declared_r = r;
    std::vector<std::uint32_t> node_depth(nodes.size(), 0);
    {
        std::vector<std::uint32_t> stack{0};
        while (!stack.empty()) {
            std::uint32_t x = stack.back();
            stack.pop_back();
            for (auto [color, y] : nodes[x].children) {
                node_depth[y] = node_depth[x] + 1;
                stack.push_back(y);
            }
        }
    }
    std::vector<VertexId> remap(nodes.size(), UINT32_MAX);
    std::vector<std::vector<VertexId>> origin_sets;
    VertexId next_id = 0;
    std::optional<VertexId> sink_id;
    std::vector<VertexId> sink_origins;
    for (std::uint32_t x = 0; x < nodes.size(); ++x) {
        if (node_depth[x] == r && r > 0) {
            if (!sink_id) {
                sink_id = next_id++;
                raw.vertex_names.push_back("t");
                origin_sets.emplace_back();
            }
            remap[x] = *sink_id;
            sink_origins.insert(sink_origins.end(), nodes[x].origins.begin(), nodes[x].origins.end());
        } else {
            remap[x] = next_id++;
            raw.vertex_names.push_back(x == 0 ? "s" : "u" + std::to_string(x));
            origin_sets.push_back(nodes[x].origins);
        }
    }
    if (sink_id) {
        std::sort(sink_origins.begin(), sink_origins.end());
        sink_origins.erase(std::unique(sink_origins.begin(), sink_origins.end()), sink_origins.end());
        origin_sets[*sink_id] = std::move(sink_origins);
    }
    for (std::uint32_t x = 0; x < nodes.size(); ++x) {
        for (auto [color, y] : nodes[x].children) {
            raw.edges.push_back({remap[x], color, remap[y]});
        }
    }
    raw.declared_source = remap[0];
    raw.declared_sink = sink_id ? *sink_id : remap[0];
    return ColoredTrie{validate(raw), std::move(origin_sets)};
}

std::uint32_t default_repetitions(unsigned k, std::size_t r, std::uint32_t cap) {
    const double rk = static_cast<double>(k) * static_cast<double>(r);
    if (rk < 1.0) return 1;
    double log_p = std::lgamma(rk + 1.0) - rk * std::log(rk);
    if (log_p < -600.0) return cap;
    double p = std::exp(log_p);
    double reps = std::ceil(std::log(100.0) / p);
    if (!(reps >= 1.0)) return 1;
    if (reps >= static_cast<double>(cap)) return cap;
    return static_cast<std::uint32_t>(reps);
}

namespace {

/// Maps one colored witness string back to an original string: backward
/// feasibility over the layers, then a forward walk picking the smallest
/// label consistent with the color sequence.
TokenString pull_back(const StringDag& dag, const Coloring& coloring,
                      const std::vector<SymbolId>& colors) {
    const std::size_t r = dag.r();
    std::vector<char> feasible(dag.vertex_count(), 0);
    feasible[dag.sink()] = 1;
    for (std::size_t d = r; d-- > 0;) {
        std::vector<char> prev(dag.vertex_count(), 0);
        for (VertexId v : dag.layers()[d]) {
            for (const DagEdge& e : dag.out_edges(v)) {
                if (coloring.color_of[e.label] == colors[d] && feasible[e.to]) {
                    prev[v] = 1;
                    break;
                }
            }
        }
        // keep only the frontier for this depth; deeper layers stay marked
        for (VertexId v : dag.layers()[d]) feasible[v] = prev[v];
    }
    if (!feasible[dag.source()]) {
        throw Error("colored witness has no matching path in the original DAG");
    }
    std::vector<SymbolId> symbols;
    symbols.reserve(r);
    VertexId v = dag.source();
    for (std::size_t d = 0; d < r; ++d) {
        const DagEdge* chosen = nullptr;
        for (const DagEdge& e : dag.out_edges(v)) {
            if (coloring.color_of[e.label] != colors[d] || !feasible[e.to]) continue;
            if (!chosen || e.label < chosen->label) chosen = &e;
        }
        if (!chosen) throw Error("colored witness walk dead-ended");
        symbols.push_back(chosen->label);
        v = chosen->to;
    }
    return TokenString(dag.alphabet(), std::move(symbols));
}

struct RepOutcome {
    bool yes = false;
    std::vector<TokenString> witness;
    SolveStats stats;
};

}  // namespace

SolveResult fpt_solve(const StringDag& dag, DiversityMode mode, unsigned k, std::uint64_t delta,
                      std::uint64_t seed, std::uint32_t repetitions, unsigned threads) {
    if (k == 0) throw InvalidInputError("k must be at least 1");
    if (repetitions == 0) throw InvalidInputError("repetitions must be at least 1");
    if (threads == 0) threads = 1;

    // Trivial parameter regimes dodge the randomized machinery entirely.
    const std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    const std::uint64_t max_achievable = mode == DiversityMode::MaxMin ? dag.r() : dag.r() * pairs;
    if (delta > max_achievable && !(mode == DiversityMode::MaxMin && k < 2)) {
        return {};
    }
    if (k == 1) {
        SolveResult direct = solve_diverse(dag, mode, k, delta);
        direct.stats.repetitions = 0;
        return direct;
    }

    const std::uint64_t colors64 = static_cast<std::uint64_t>(k) * dag.r();
    if (colors64 > 1'000'000) throw BudgetError("rK color budget exceeded");
    const std::uint32_t num_colors = static_cast<std::uint32_t>(colors64);

    auto run_one = [&](std::uint32_t rep) -> RepOutcome {
        RepOutcome out;
        Coloring coloring = random_coloring(*dag.alphabet(), num_colors, seed + rep);
        ColoredTrie trie = build_colored_trie(dag, coloring);
        SolveResult colored = solve_diverse(trie.dag, mode, k, delta);
        out.stats = colored.stats;
        if (!colored.yes) return out;
        std::vector<TokenString> pulled;
        pulled.reserve(k);
        for (const TokenString& cw : colored.witness) {
            pulled.push_back(pull_back(dag, coloring, cw.symbols()));
        }
        // Colored label inequality implies symbol inequality, so the true
        // diversity can only be larger; verify anyway before answering YES.
        bool verified = mode == DiversityMode::MaxMin
                            ? min_diversity(pulled).at_least(delta)
                            : sum_diversity(pulled) >= delta;
        if (verified) {
            out.yes = true;
            out.witness = std::move(pulled);
        }
        return out;
    };

    SolveResult result;
    std::uint32_t executed = 0;
    for (std::uint32_t base = 0; base < repetitions && !result.yes; base += threads) {
        std::uint32_t wave = std::min<std::uint32_t>(threads, repetitions - base);
        std::vector<std::future<RepOutcome>> futures;
        futures.reserve(wave);
        for (std::uint32_t i = 0; i < wave; ++i) {
            futures.push_back(std::async(wave == 1 ? std::launch::deferred : std::launch::async,
                                         run_one, base + i));
        }
        for (std::uint32_t i = 0; i < wave; ++i) {
            RepOutcome out = futures[i].get();
            if (!result.yes) ++executed;
            result.stats.states += out.stats.states;
            result.stats.transitions += out.stats.transitions;
            if (out.yes && !result.yes) {
                result.yes = true;
                result.witness = std::move(out.witness);
                result.achieved = mode == DiversityMode::MaxMin
                                      ? min_diversity(result.witness)
                                      : DiversityValue::finite(sum_diversity(result.witness));
            }
        }
    }
    result.stats.repetitions = executed;
    return result;
}

}  // namespace divstr
