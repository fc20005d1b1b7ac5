#include "divstr/lcs_dag.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace divstr {

namespace {

constexpr std::uint64_t kMaxGridCells = 1ull << 26;

struct Grid {
    std::vector<std::size_t> lens;       // string lengths
    std::vector<std::uint64_t> stride;   // mixed-radix strides
    std::uint64_t cells = 1;

    explicit Grid(const std::vector<TokenString>& strings) {
        stride.resize(strings.size());
        for (std::size_t k = 0; k < strings.size(); ++k) {
            lens.push_back(strings[k].length());
            stride[k] = cells;
            cells *= lens[k] + 1;
            if (cells > kMaxGridCells) {
                throw BudgetError("LCS grid would exceed " + std::to_string(kMaxGridCells) + " cells");
            }
        }
    }

    std::uint64_t index(const std::vector<std::size_t>& coord) const {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < coord.size(); ++k) idx += coord[k] * stride[k];
        return idx;
    }

    std::vector<std::size_t> coord(std::uint64_t idx) const {
        std::vector<std::size_t> c(lens.size());
        for (std::size_t k = 0; k < lens.size(); ++k) {
            c[k] = idx / stride[k] % (lens[k] + 1);
        }
        return c;
    }
};

// Forward LCS table over prefix tuples, filled in mixed-radix order.
std::vector<std::uint32_t> lcs_table(const Grid& grid, const std::vector<TokenString>& strings) {
    std::vector<std::uint32_t> f(grid.cells, 0);
    std::vector<std::size_t> c(strings.size(), 0);
    for (std::uint64_t idx = 1; idx < grid.cells; ++idx) {
        // advance the coordinate odometer
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (++c[k] <= grid.lens[k]) break;
            c[k] = 0;
        }
        std::uint32_t best = 0;
        bool all_positive = true;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) {
                all_positive = false;
                continue;
            }
            best = std::max(best, f[idx - grid.stride[k]]);
        }
        if (all_positive) {
            SymbolId sym = strings[0][c[0] - 1];
            bool match = true;
            for (std::size_t k = 1; k < c.size() && match; ++k) {
                match = strings[k][c[k] - 1] == sym;
            }
            if (match) {
                std::uint64_t diag = idx;
                for (std::size_t k = 0; k < c.size(); ++k) diag -= grid.stride[k];
                best = std::max(best, f[diag] + 1);
            }
        }
        f[idx] = best;
    }
    return f;
}

}  // namespace

std::size_t lcs_length(const std::vector<TokenString>& strings) {
    if (strings.empty()) throw InvalidInputError("lcs_length requires at least one string");
    for (std::size_t k = 1; k < strings.size(); ++k) {
        if (!same_alphabet(strings[0].alphabet(), strings[k].alphabet())) {
            throw InvalidInputError("lcs_length requires a shared alphabet");
        }
    }
    Grid grid(strings);
    std::vector<std::uint32_t> f = lcs_table(grid, strings);
    return f[grid.cells - 1];
}

StringDag remove_epsilons(const EpsilonDag& input) {
    if (!input.alphabet) throw InvalidInputError("epsilon removal requires an alphabet");
    if (input.vertex_count == 0) throw InvalidInputError("epsilon removal requires vertices");

    const std::size_t n = input.vertex_count;
    std::vector<std::vector<VertexId>> eps_succ(n), eps_pred(n);
    std::vector<std::vector<std::pair<SymbolId, VertexId>>> labeled(n);
    for (const EpsilonEdge& e : input.edges) {
        if (e.from >= n || e.to >= n) throw InvalidInputError("epsilon edge endpoint out of range");
        if (e.label) {
            labeled[e.from].emplace_back(*e.label, e.to);
        } else {
            eps_succ[e.from].push_back(e.to);
            eps_pred[e.to].push_back(e.from);
        }
    }

    // Vertices that reach the sink through epsilon edges alone are accepting;
    // they all collapse into the new sink.
    std::vector<char> accepting(n, 0);
    {
        std::vector<VertexId> stack{input.sink};
        accepting[input.sink] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (VertexId p : eps_pred[v]) {
                if (!accepting[p]) {
                    accepting[p] = 1;
                    stack.push_back(p);
                }
            }
        }
    }

    // A labeled edge epsilon-reachable from a reachable accepting vertex
    // would mean two spelled lengths; reject instead of dropping it.
    {
        std::vector<char> reach(n, 0);
        std::vector<VertexId> stack2{input.source};
        reach[input.source] = 1;
        while (!stack2.empty()) {
            VertexId v = stack2.back();
            stack2.pop_back();
            for (VertexId w : eps_succ[v]) {
                if (!reach[w]) {
                    reach[w] = 1;
                    stack2.push_back(w);
                }
            }
            for (auto [label, w] : labeled[v]) {
                (void)label;
                if (!reach[w]) {
                    reach[w] = 1;
                    stack2.push_back(w);
                }
            }
        }
        std::vector<char> after(n, 0);
        for (VertexId v = 0; v < n; ++v) {
            if (accepting[v] && reach[v] && !after[v]) {
                after[v] = 1;
                stack2.push_back(v);
            }
        }
        while (!stack2.empty()) {
            VertexId v = stack2.back();
            stack2.pop_back();
            if (!labeled[v].empty()) {
                throw InvalidInputError("labeled paths do not spell an equi-length language");
            }
            for (VertexId w : eps_succ[v]) {
                if (!after[w]) {
                    after[w] = 1;
                    stack2.push_back(w);
                }
            }
        }
    }

    // Anchors survive: the source plus every head of a labeled edge.
    std::vector<char> is_anchor(n, 0);
    is_anchor[input.source] = 1;
    for (const EpsilonEdge& e : input.edges) {
        if (e.label) is_anchor[e.to] = 1;
    }

    const VertexId kSink = static_cast<VertexId>(n);  // merged accepting class
    auto repr = [&](VertexId v) { return accepting[v] ? kSink : v; };

    std::vector<std::vector<DagEdge>> new_out(n + 1);
    std::vector<char> closure_mark(n, 0);
    std::vector<VertexId> closure, stack;
    for (VertexId a = 0; a < n; ++a) {
        if (!is_anchor[a] || accepting[a]) continue;
        closure.clear();
        stack.assign(1, a);
        closure_mark[a] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            closure.push_back(v);
            for (VertexId w : eps_succ[v]) {
                if (!closure_mark[w]) {
                    closure_mark[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (VertexId v : closure) {
            for (auto [label, w] : labeled[v]) {
                new_out[repr(a)].push_back({repr(a), label, repr(w)});
            }
        }
        for (VertexId v : closure) closure_mark[v] = 0;
    }

    // Keep only vertices both reachable from the source and reaching the sink.
    VertexId new_source = repr(input.source);
    std::vector<char> fwd(n + 1, 0), bwd(n + 1, 0);
    {
        stack.assign(1, new_source);
        fwd[new_source] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const DagEdge& e : new_out[v]) {
                if (!fwd[e.to]) {
                    fwd[e.to] = 1;
                    stack.push_back(e.to);
                }
            }
        }
        std::vector<std::vector<VertexId>> preds(n + 1);
        for (VertexId v = 0; v <= n; ++v) {
            for (const DagEdge& e : new_out[v]) preds[e.to].push_back(e.from);
        }
        stack.assign(1, kSink);
        bwd[kSink] = 1;
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
    }
    if (!fwd[kSink] || !bwd[new_source]) {
        throw InvalidInputError("epsilon removal produced an empty language");
    }

    RawDag raw;
    raw.alphabet = input.alphabet;
    std::vector<VertexId> remap(n + 1, UINT32_MAX);
    auto keep = [&](VertexId v) { return fwd[v] && bwd[v]; };
    VertexId next_id = 0;
    for (VertexId v = 0; v <= n; ++v) {
        if (!keep(v)) continue;
        remap[v] = next_id++;
        if (v == new_source) {
            raw.vertex_names.push_back("s");
        } else if (v == kSink) {
            raw.vertex_names.push_back("t");
        } else {
            raw.vertex_names.push_back("v" + std::to_string(v));
        }
    }
    for (VertexId v = 0; v <= n; ++v) {
        if (!keep(v)) continue;
        for (const DagEdge& e : new_out[v]) {
            if (keep(e.to)) raw.edges.push_back({remap[v], e.label, remap[e.to]});
        }
    }
    raw.declared_source = remap[new_source];
    raw.declared_sink = remap[kSink];
    StringDag dag = validate(raw);

    // Suffix-sharing merge, bottom-up by depth: vertices with identical
    // (depth, out-edge set) signatures represent the same suffix language.
    const std::size_t r = dag.r();
    std::vector<VertexId> cls(dag.vertex_count());
    for (VertexId v = 0; v < dag.vertex_count(); ++v) cls[v] = v;
    for (std::size_t d = r; d-- > 1;) {
        std::map<std::vector<std::pair<SymbolId, VertexId>>, VertexId> seen;
        for (VertexId v : dag.layers()[d]) {
            std::vector<std::pair<SymbolId, VertexId>> sig;
            for (const DagEdge& e : dag.out_edges(v)) sig.emplace_back(e.label, cls[e.to]);
            std::sort(sig.begin(), sig.end());
            sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
            auto [it, inserted] = seen.emplace(std::move(sig), v);
            cls[v] = it->second;
        }
    }
    RawDag merged;
    merged.alphabet = dag.alphabet();
    std::vector<VertexId> remap2(dag.vertex_count(), UINT32_MAX);
    VertexId id = 0;
    for (VertexId v = 0; v < dag.vertex_count(); ++v) {
        if (cls[v] == v) {
            remap2[v] = id++;
            merged.vertex_names.push_back(dag.vertex_name(v));
        }
    }
    for (const DagEdge& e : dag.edges()) {
        merged.edges.push_back({remap2[cls[e.from]], e.label, remap2[cls[e.to]]});
    }
    merged.declared_r = r;
    merged.declared_source = remap2[cls[dag.source()]];
    merged.declared_sink = remap2[cls[dag.sink()]];
    return validate(merged);
}

StringDag build_lcs_dag(const std::vector<TokenString>& strings) {
    if (strings.empty()) throw InvalidInputError("build_lcs_dag requires at least one string");
    for (std::size_t k = 1; k < strings.size(); ++k) {
        if (!same_alphabet(strings[0].alphabet(), strings[k].alphabet())) {
            throw InvalidInputError("build_lcs_dag requires a shared alphabet");
        }
    }
    Grid grid(strings);
    std::vector<std::uint32_t> fwd = lcs_table(grid, strings);
    const std::uint32_t lcs = fwd[grid.cells - 1];
    if (lcs == 0) throw NoLcsError("the empty string is the only common subsequence");

    std::vector<TokenString> reversed;
    reversed.reserve(strings.size());
    for (const TokenString& s : strings) {
        std::vector<SymbolId> sym(s.symbols().rbegin(), s.symbols().rend());
        reversed.emplace_back(s.alphabet(), std::move(sym));
    }
    std::vector<std::uint32_t> rev = lcs_table(grid, reversed);
    // bwd(i1..im) = LCS of the suffix tuple = rev table at the mirrored cell.
    auto bwd = [&](const std::vector<std::size_t>& c) {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k < c.size(); ++k) idx += (grid.lens[k] - c[k]) * grid.stride[k];
        return rev[idx];
    };

    // BFS from the all-zeros cell over edges that lie on an optimal path:
    // a match edge is kept iff fwd(u) + 1 + bwd(v) = lcs; an epsilon edge iff
    // it preserves both fwd and fwd + bwd = lcs.
    const std::size_t m = strings.size();
    EpsilonDag eps;
    eps.alphabet = strings[0].alphabet();
    std::unordered_map<std::uint64_t, VertexId> ids;
    std::vector<std::uint64_t> order;
    auto local = [&](std::uint64_t cell) {
        auto [it, inserted] = ids.emplace(cell, static_cast<VertexId>(ids.size()));
        if (inserted) order.push_back(cell);
        return it->second;
    };

    const std::uint64_t start = 0;
    const std::uint64_t goal = grid.cells - 1;
    eps.source = local(start);
    std::size_t head = 0;
    while (head < order.size()) {
        std::uint64_t cell = order[head++];
        VertexId u = ids[cell];
        std::vector<std::size_t> c = grid.coord(cell);
        std::uint32_t fu = fwd[cell];
        std::uint32_t bu = bwd(c);
        // epsilon moves advance one coordinate
        for (std::size_t k = 0; k < m; ++k) {
            if (c[k] >= grid.lens[k]) continue;
            std::uint64_t next = cell + grid.stride[k];
            c[k] += 1;
            std::uint32_t fv = fwd[next];
            std::uint32_t bv = bwd(c);
            c[k] -= 1;
            if (fv == fu && fu + bu == lcs && fv + bv == lcs) {
                eps.edges.push_back({u, std::nullopt, local(next)});
            }
        }
        // the match move advances every coordinate
        bool can_match = true;
        SymbolId sym = 0;
        for (std::size_t k = 0; k < m && can_match; ++k) {
            if (c[k] >= grid.lens[k]) {
                can_match = false;
            } else if (k == 0) {
                sym = strings[0][c[0]];
            } else if (strings[k][c[k]] != sym) {
                can_match = false;
            }
        }
        if (can_match) {
            std::uint64_t next = cell;
            for (std::size_t k = 0; k < m; ++k) {
                next += grid.stride[k];
                c[k] += 1;
            }
            std::uint32_t bv = bwd(c);
            for (std::size_t k = 0; k < m; ++k) c[k] -= 1;
            if (fu + 1 + bv == lcs) {
                eps.edges.push_back({u, sym, local(next)});
            }
        }
    }
    eps.vertex_count = ids.size();
    eps.sink = ids.at(goal);
    return remove_epsilons(eps);
}

}  // namespace divstr
