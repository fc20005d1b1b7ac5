#include "divstr/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace divstr {

namespace {

constexpr std::uint64_t kMaxStates = 80'000'000;

// State of the farthest-string DP: (vertex, capped sum, prefix-match mask).
// Bit f of the mask is set while the path read so far equals the prefix of
// forbidden string f.
struct FarthestLayer {
    std::vector<std::uint64_t> key;  // packed (vertex, z, mask)
    std::vector<std::uint32_t> parent;
    std::vector<SymbolId> label;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
};

std::optional<FarthestResult> farthest_impl(const StringDag& dag,
                                            const std::vector<TokenString>& reference,
                                            const std::vector<TokenString>& forbidden,
                                            std::uint64_t cap) {
    for (const TokenString& x : reference) {
        if (x.length() != dag.r() || !same_alphabet(x.alphabet(), dag.alphabet())) {
            throw InvalidInputError("reference strings must have length r over the DAG alphabet");
        }
    }
    for (const TokenString& x : forbidden) {
        if (x.length() != dag.r() || !same_alphabet(x.alphabet(), dag.alphabet())) {
            throw InvalidInputError("forbidden strings must have length r over the DAG alphabet");
        }
    }
    if (forbidden.size() > 20) throw BudgetError("too many forbidden strings");

    const std::uint64_t zr = cap + 1;
    const std::uint64_t masks = 1ull << forbidden.size();
    if (static_cast<unsigned __int128>(dag.vertex_count()) * zr * masks > (1ull << 62)) {
        throw BudgetError("farthest-string state space too large to encode");
    }
    const std::uint64_t full_mask = masks - 1;
    auto pack = [&](VertexId v, std::uint64_t z, std::uint64_t mask) {
        return (static_cast<std::uint64_t>(v) * zr + z) * masks + mask;
    };

    SolveStats stats;
    std::vector<FarthestLayer> layers(dag.r() + 1);
    auto insert = [&](FarthestLayer& layer, std::uint64_t key, std::uint32_t parent, SymbolId label) {
        auto [it, inserted] = layer.index.emplace(key, static_cast<std::uint32_t>(layer.key.size()));
        if (inserted) {
            layer.key.push_back(key);
            layer.parent.push_back(parent);
            layer.label.push_back(label);
            if (++stats.states > kMaxStates) throw BudgetError("farthest-string DP exceeded the state budget");
        }
    };
    insert(layers[0], pack(dag.source(), 0, full_mask), UINT32_MAX, 0);

    for (std::size_t d = 0; d < dag.r(); ++d) {
        const FarthestLayer& prev = layers[d];
        FarthestLayer& next = layers[d + 1];
        for (std::uint32_t i = 0; i < prev.key.size(); ++i) {
            std::uint64_t key = prev.key[i];
            std::uint64_t mask = key % masks;
            std::uint64_t z = key / masks % zr;
            VertexId v = static_cast<VertexId>(key / masks / zr);
            for (const DagEdge& e : dag.out_edges(v)) {
                std::uint64_t inc = 0;
                for (const TokenString& x : reference) {
                    if (x[d] != e.label) ++inc;
                }
                std::uint64_t nz = std::min(cap, z + inc);
                stats.max_entry = std::max(stats.max_entry, nz);
                std::uint64_t nmask = mask;
                for (std::size_t f = 0; f < forbidden.size(); ++f) {
                    if ((nmask >> f & 1) && forbidden[f][d] != e.label) nmask &= ~(1ull << f);
                }
                ++stats.transitions;
                insert(next, pack(e.to, nz, nmask), i, e.label);
            }
        }
    }

    const FarthestLayer& last = layers[dag.r()];
    std::optional<std::uint32_t> best;
    std::uint64_t best_value = 0;
    for (std::uint32_t i = 0; i < last.key.size(); ++i) {
        std::uint64_t mask = last.key[i] % masks;
        if (mask != 0) continue;  // the spelled string equals a forbidden one
        std::uint64_t z = last.key[i] / masks % zr;
        if (!best || z > best_value) {
            best = i;
            best_value = z;
        }
    }
    if (!best) return std::nullopt;

    std::vector<SymbolId> symbols(dag.r());
    std::uint32_t idx = *best;
    for (std::size_t d = dag.r(); d > 0; --d) {
        symbols[d - 1] = layers[d].label[idx];
        idx = layers[d].parent[idx];
    }
    return FarthestResult{TokenString(dag.alphabet(), std::move(symbols)), best_value, stats};
}

std::vector<TokenString> sample_distinct(const StringDag& dag, unsigned k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<TokenString> out;
    unsigned rejects = 0;
    while (out.size() < k && rejects < 10'000) {
        std::vector<SymbolId> symbols;
        VertexId v = dag.source();
        while (v != dag.sink()) {
            auto edges = dag.out_edges(v);
            const DagEdge& e = edges[rng() % edges.size()];
            symbols.push_back(e.label);
            v = e.to;
        }
        TokenString candidate(dag.alphabet(), std::move(symbols));
        if (std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(std::move(candidate));
            rejects = 0;
        } else {
            ++rejects;
        }
    }
    if (out.size() < k) {
        // Rejection stalled: fall back to the lexicographic enumeration.
        LanguageSample sample = enumerate_language(dag, k);
        out.assign(sample.strings.begin(), sample.strings.end());
    }
    return out;
}

}  // namespace

FarthestResult farthest_string(const StringDag& dag, const std::vector<TokenString>& reference,
                               std::uint64_t cap) {
    auto result = farthest_impl(dag, reference, {}, cap);
    return std::move(*result);  // never empty: every represented string qualifies
}

std::optional<FarthestResult> farthest_string_excluding(const StringDag& dag,
                                                        const std::vector<TokenString>& reference,
                                                        const std::vector<TokenString>& forbidden,
                                                        std::uint64_t cap) {
    return farthest_impl(dag, reference, forbidden, cap);
}

unsigned local_search_iterations(unsigned k) {
    if (k < 2) return 0;
    double kk = k;
    double value = (kk * (kk - 1) / (kk + 1)) * std::log((kk + 2) * (kk - 1) * (kk - 1) / 4.0);
    return static_cast<unsigned>(std::ceil(std::max(0.0, value)));
}

std::vector<TokenString> local_search_maxsum(
    const StringDag& dag, unsigned k, std::uint64_t seed,
    const std::function<void(const std::vector<TokenString>&)>& observer) {
    if (k == 0) throw InvalidInputError("k must be at least 1");

    LanguageSample probe = enumerate_language(dag, k + 1);
    if (probe.strings.size() < k) {
        throw InfeasibleError("the language has fewer than k strings");
    }
    if (probe.strings.size() == k && !probe.truncated) {
        // The language is exactly the K strings; no swap candidate exists.
        if (observer) observer(probe.strings);
        return probe.strings;
    }

    std::vector<TokenString> current = sample_distinct(dag, k, seed);
    if (observer) observer(current);
    const std::uint64_t cap = dag.r() * static_cast<std::uint64_t>(k > 0 ? k - 1 : 0);

    unsigned budget = local_search_iterations(k);
    for (unsigned iter = 0; iter < budget; ++iter) {
        for (unsigned idx = 0; idx < k; ++idx) {
            std::vector<TokenString> rest;
            rest.reserve(k - 1);
            for (unsigned j = 0; j < k; ++j) {
                if (j != idx) rest.push_back(current[j]);
            }
            FarthestResult far = farthest_string(dag, rest, cap);
            bool collides = std::find(current.begin(), current.end(), far.best) != current.end();
            if (collides) {
                auto excluded = farthest_string_excluding(dag, rest, current, cap);
                if (!excluded) continue;  // everything outside the set is forbidden
                far = std::move(*excluded);
            }
            std::uint64_t old_sum = sum_diversity(current);
            std::vector<TokenString> swapped = rest;
            swapped.push_back(far.best);
            std::uint64_t new_sum = sum_diversity(swapped);
            if (new_sum > old_sum) {
                current[idx] = far.best;
            }
        }
        if (observer) observer(current);
    }
    return current;
}

PtasResult ptas_maxsum(const StringDag& dag, unsigned k, double epsilon, std::uint64_t seed) {
    if (k == 0) throw InvalidInputError("k must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidInputError("epsilon must lie in (0, 1)");

    LanguageSample probe = enumerate_language(dag, k);
    if (probe.strings.size() < k) {
        throw InfeasibleError("the language has fewer than k strings");
    }

    PtasResult out;
    if (static_cast<double>(k) * epsilon < 2.0) {
        OptimizeResult opt = optimize_diversity(dag, DiversityMode::MaxSum, k);
        out.strings = std::move(opt.witness);
        out.value = opt.optimum.value();
        out.exact_branch = true;
    } else {
        out.strings = local_search_maxsum(dag, k, seed);
        out.value = sum_diversity(out.strings);
        out.exact_branch = false;
    }
    return out;
}

}  // namespace divstr
