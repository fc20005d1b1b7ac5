#include "divstr/exact_dp.hpp"

#include <algorithm>
#include <unordered_map>

namespace divstr {

const char* to_string(DiversityMode mode) {
    return mode == DiversityMode::MaxMin ? "maxmin" : "maxsum";
}

namespace {

constexpr std::uint64_t kMaxStates = 80'000'000;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct StateKey {
    std::uint64_t w;
    std::uint64_t z;
    bool operator==(const StateKey&) const = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const {
        return static_cast<std::size_t>(mix64(k.w ^ mix64(k.z)));
    }
};

// Mixed-radix packing of a vertex tuple and the weight entries into two
// 64-bit codes. Desk-scale parameters always fit; anything larger trips the
// budget check rather than overflowing.
struct StateCodec {
    std::uint64_t vertex_radix;
    std::uint64_t weight_radix;  // cap + 1
    unsigned k;
    unsigned entries;

    StateCodec(std::uint64_t num_vertices, std::uint64_t cap, unsigned k_, unsigned entries_)
        : vertex_radix(num_vertices), weight_radix(cap + 1), k(k_), entries(entries_) {
        check_fits(vertex_radix, k, "vertex tuple");
        check_fits(weight_radix, entries, "weight matrix");
    }

    static void check_fits(std::uint64_t radix, unsigned count, const char* what) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < count; ++i) {
            if (radix != 0 && total > (1ull << 62) / radix) {
                throw BudgetError(std::string("state space too large to encode: ") + what);
            }
            total *= radix;
        }
    }

    std::uint64_t encode(const std::uint32_t* values, unsigned count, std::uint64_t radix) const {
        std::uint64_t code = 0;
        for (unsigned i = count; i-- > 0;) code = code * radix + values[i];
        return code;
    }

    void decode(std::uint64_t code, std::uint32_t* values, unsigned count, std::uint64_t radix) const {
        for (unsigned i = 0; i < count; ++i) {
            values[i] = static_cast<std::uint32_t>(code % radix);
            code /= radix;
        }
    }
};

struct Layer {
    std::vector<StateKey> keys;           // per state
    std::vector<std::uint32_t> parent;    // index into previous layer
    std::vector<SymbolId> labels;         // K labels per state (edge taken into this layer)
    std::unordered_map<StateKey, std::uint32_t, StateKeyHash> index;

    std::uint32_t insert(const StateKey& key, std::uint32_t parent_idx, const SymbolId* labs, unsigned k) {
        auto [it, inserted] = index.emplace(key, static_cast<std::uint32_t>(keys.size()));
        if (inserted) {
            keys.push_back(key);
            parent.push_back(parent_idx);
            labels.insert(labels.end(), labs, labs + k);
        }
        return it->second;
    }
};

struct DpRun {
    const StringDag& dag;
    DiversityMode mode;
    unsigned k;
    std::uint64_t delta;
    std::uint64_t cap;
    unsigned entries;  // weight slots: K(K-1)/2 for MaxMin, 1 for MaxSum
    StateCodec codec;
    std::vector<Layer> layers;
    SolveStats stats;

    DpRun(const StringDag& dag_, DiversityMode mode_, unsigned k_, std::uint64_t delta_, std::uint64_t cap_)
        : dag(dag_),
          mode(mode_),
          k(k_),
          delta(delta_),
          cap(cap_),
          entries(mode_ == DiversityMode::MaxMin ? k_ * (k_ - 1) / 2 : 1),
          codec(dag_.vertex_count(), cap_, k_, entries) {}

    void run() {
        layers.resize(dag.r() + 1);
        std::vector<std::uint32_t> w(k, dag.source());
        std::vector<std::uint32_t> z(entries, 0);
        StateKey start{codec.encode(w.data(), k, codec.vertex_radix),
                       codec.encode(z.data(), entries, codec.weight_radix)};
        std::vector<SymbolId> no_labels(k, 0);
        layers[0].insert(start, UINT32_MAX, no_labels.data(), k);
        stats.states = 1;

        std::vector<std::uint32_t> u(entries);
        std::vector<std::uint32_t> nz(entries);
        std::vector<std::uint32_t> nw(k);
        std::vector<SymbolId> labs(k);
        std::vector<std::span<const DagEdge>> outs(k);
        std::vector<std::size_t> pick(k);

        for (std::size_t d = 0; d < dag.r(); ++d) {
            const Layer& prev = layers[d];
            Layer& next = layers[d + 1];
            for (std::uint32_t sidx = 0; sidx < prev.keys.size(); ++sidx) {
                codec.decode(prev.keys[sidx].w, w.data(), k, codec.vertex_radix);
                codec.decode(prev.keys[sidx].z, u.data(), entries, codec.weight_radix);
                bool empty = false;
                for (unsigned i = 0; i < k; ++i) {
                    outs[i] = dag.out_edges(w[i]);
                    if (outs[i].empty()) empty = true;
                }
                if (empty) continue;  // cannot happen below the sink layer
                std::fill(pick.begin(), pick.end(), 0);
                while (true) {
                    for (unsigned i = 0; i < k; ++i) {
                        const DagEdge& e = outs[i][pick[i]];
                        labs[i] = e.label;
                        nw[i] = e.to;
                    }
                    if (mode == DiversityMode::MaxMin) {
                        unsigned p = 0;
                        for (unsigned i = 0; i < k; ++i) {
                            for (unsigned j = i + 1; j < k; ++j, ++p) {
                                std::uint64_t v = u[p] + (labs[i] != labs[j] ? 1 : 0);
                                nz[p] = static_cast<std::uint32_t>(std::min(cap, v));
                                stats.max_entry = std::max<std::uint64_t>(stats.max_entry, nz[p]);
                            }
                        }
                    } else {
                        std::uint64_t inc = 0;
                        for (unsigned i = 0; i < k; ++i) {
                            for (unsigned j = i + 1; j < k; ++j) inc += labs[i] != labs[j] ? 1 : 0;
                        }
                        nz[0] = static_cast<std::uint32_t>(std::min(cap, u[0] + inc));
                        stats.max_entry = std::max<std::uint64_t>(stats.max_entry, nz[0]);
                    }
                    StateKey key{codec.encode(nw.data(), k, codec.vertex_radix),
                                 codec.encode(nz.data(), entries, codec.weight_radix)};
                    std::size_t before = next.keys.size();
                    next.insert(key, sidx, labs.data(), k);
                    stats.states += next.keys.size() - before;
                    ++stats.transitions;
                    if (stats.states > kMaxStates) {
                        throw BudgetError("diversity DP exceeded the state budget");
                    }
                    // odometer over the K out-edge lists
                    unsigned i = 0;
                    for (; i < k; ++i) {
                        if (++pick[i] < outs[i].size()) break;
                        pick[i] = 0;
                    }
                    if (i == k) break;
                }
            }
        }
    }

    bool accepts(const StateKey& key) const {
        std::vector<std::uint32_t> z(entries);
        codec.decode(key.z, z.data(), entries, codec.weight_radix);
        if (mode == DiversityMode::MaxMin) {
            if (k < 2) return true;  // min over no pairs is infinite
            for (unsigned p = 0; p < entries; ++p) {
                if (z[p] < delta) return false;
            }
            return true;
        }
        return z[0] >= delta;
    }

    std::vector<TokenString> traceback(std::uint32_t idx) const {
        std::vector<std::vector<SymbolId>> symbols(k, std::vector<SymbolId>(dag.r()));
        for (std::size_t d = dag.r(); d > 0; --d) {
            const Layer& layer = layers[d];
            for (unsigned i = 0; i < k; ++i) {
                symbols[i][d - 1] = layer.labels[static_cast<std::size_t>(idx) * k + i];
            }
            idx = layer.parent[idx];
        }
        std::vector<TokenString> out;
        out.reserve(k);
        for (unsigned i = 0; i < k; ++i) out.emplace_back(dag.alphabet(), std::move(symbols[i]));
        return out;
    }
};

SolveResult solve_impl(const StringDag& dag, DiversityMode mode, unsigned k, std::uint64_t delta,
                       std::optional<std::uint64_t> cap_override) {
    if (k == 0) throw InvalidInputError("k must be at least 1");

    SolveResult result;
    const std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    const std::uint64_t max_achievable =
        mode == DiversityMode::MaxMin ? dag.r() : dag.r() * pairs;
    if (delta > max_achievable && !(mode == DiversityMode::MaxMin && k < 2)) {
        // No K-tuple can reach the threshold; distances are bounded by r.
        return result;
    }

    std::uint64_t cap = cap_override.value_or(std::min(delta, max_achievable));
    DpRun run(dag, mode, k, delta, cap);
    run.run();

    const Layer& final_layer = run.layers[dag.r()];
    for (std::uint32_t i = 0; i < final_layer.keys.size(); ++i) {
        if (!run.accepts(final_layer.keys[i])) continue;
        result.yes = true;
        result.witness = run.traceback(i);
        result.achieved = mode == DiversityMode::MaxMin ? min_diversity(result.witness)
                                                        : DiversityValue::finite(sum_diversity(result.witness));
        break;
    }
    result.stats = run.stats;
    return result;
}

}  // namespace

SolveResult solve_maxmin(const StringDag& dag, unsigned k, std::uint64_t delta,
                         std::optional<std::uint64_t> cap) {
    return solve_impl(dag, DiversityMode::MaxMin, k, delta, cap);
}

SolveResult solve_maxsum(const StringDag& dag, unsigned k, std::uint64_t delta,
                         std::optional<std::uint64_t> cap) {
    return solve_impl(dag, DiversityMode::MaxSum, k, delta, cap);
}

SolveResult solve_diverse(const StringDag& dag, DiversityMode mode, unsigned k, std::uint64_t delta) {
    return solve_impl(dag, mode, k, delta, std::nullopt);
}

OptimizeResult optimize_diversity(const StringDag& dag, DiversityMode mode, unsigned k) {
    if (k == 0) throw InvalidInputError("k must be at least 1");
    OptimizeResult out;

    if (mode == DiversityMode::MaxMin && k < 2) {
        SolveResult base = solve_maxmin(dag, k, 0);
        out.optimum = DiversityValue::infinite();
        out.witness = std::move(base.witness);
        out.stats = base.stats;
        out.solver_calls = 1;
        return out;
    }

    const std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k - 1) / 2;
    std::uint64_t lo = 0;
    std::uint64_t hi = mode == DiversityMode::MaxMin ? dag.r() : dag.r() * pairs;

    SolveResult best = solve_diverse(dag, mode, k, lo);
    out.stats = best.stats;
    out.solver_calls = 1;
    // delta = 0 is always YES, so the invariant "lo is YES" holds throughout.
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        SolveResult probe = solve_diverse(dag, mode, k, mid);
        ++out.solver_calls;
        out.stats.states += probe.stats.states;
        out.stats.transitions += probe.stats.transitions;
        if (probe.yes) {
            lo = mid;
            best = std::move(probe);
        } else {
            hi = mid - 1;
        }
    }
    out.optimum = DiversityValue::finite(lo);
    out.witness = std::move(best.witness);
    return out;
}

}  // namespace divstr
