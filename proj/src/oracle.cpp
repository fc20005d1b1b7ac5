#include "divstr/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

namespace divstr {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point end;
    std::uint64_t checks = 0;

    explicit Deadline(const OracleBudget& budget) : end(Clock::now() + budget.time_ceiling) {}

    void poll() {
        if ((++checks & 0xFFF) == 0 && Clock::now() > end) {
            throw BudgetError("oracle time ceiling exceeded");
        }
    }
};

// C(n, k) with saturation, for budget checks.
std::uint64_t choose_sat(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (result > cap) return cap + 1;
        result = result * (n - k + i) / i;
    }
    return std::min(result, cap + 1);
}

bool is_subsequence(const std::vector<SymbolId>& needle, const std::vector<SymbolId>& hay) {
    std::size_t i = 0;
    for (SymbolId c : hay) {
        if (i < needle.size() && needle[i] == c) ++i;
    }
    return i == needle.size();
}

std::vector<TokenString> lcs_by_subsequence_enumeration(const std::vector<TokenString>& strings,
                                                        const OracleBudget& budget) {
    std::size_t shortest = 0;
    for (std::size_t i = 1; i < strings.size(); ++i) {
        if (strings[i].length() < strings[shortest].length()) shortest = i;
    }
    const std::vector<SymbolId>& base = strings[shortest].symbols();
    if (base.size() >= 63 || (1ull << base.size()) > budget.max_subsequences) {
        throw BudgetError("subsequence enumeration budget exceeded");
    }
    Deadline deadline(budget);
    std::set<std::vector<SymbolId>> best;
    std::size_t best_len = 0;
    for (std::uint64_t mask = 0; mask < (1ull << base.size()); ++mask) {
        deadline.poll();
        std::vector<SymbolId> cand;
        for (std::size_t i = 0; i < base.size(); ++i) {
            if (mask >> i & 1) cand.push_back(base[i]);
        }
        if (cand.size() < best_len) continue;
        bool common = true;
        for (std::size_t i = 0; i < strings.size() && common; ++i) {
            if (i != shortest) common = is_subsequence(cand, strings[i].symbols());
        }
        if (!common) continue;
        if (cand.size() > best_len) {
            best_len = cand.size();
            best.clear();
        }
        best.insert(std::move(cand));
    }
    std::vector<TokenString> out;
    out.reserve(best.size());
    for (const auto& symbols : best) out.emplace_back(strings[0].alphabet(), symbols);
    return out;
}

}  // namespace

BruteDiverseResult brute_diverse(const StringSet& set, unsigned k, std::uint64_t delta,
                                 DiversityMode mode, SelectionSemantics semantics,
                                 const OracleBudget& budget) {
    if (k == 0) throw InvalidInputError("k must be at least 1");
    const std::uint64_t n = set.size();
    const std::uint64_t count = semantics == SelectionSemantics::Tuple
                                    ? choose_sat(n + k - 1, k, budget.max_tuples)
                                    : choose_sat(n, k, budget.max_tuples);
    if (count > budget.max_tuples) throw BudgetError("tuple enumeration budget exceeded");

    BruteDiverseResult result;
    if (semantics == SelectionSemantics::Set && n < k) {
        return result;  // no K-subset exists
    }

    std::vector<TokenString> sorted = set.members();
    std::sort(sorted.begin(), sorted.end());

    Deadline deadline(budget);
    std::vector<std::uint32_t> pick(k, 0);
    if (semantics == SelectionSemantics::Set) {
        for (unsigned i = 0; i < k; ++i) pick[i] = i;
    }
    bool first = true;
    bool exhausted = false;
    while (!exhausted) {
        deadline.poll();
        std::vector<TokenString> tuple;
        tuple.reserve(k);
        for (std::uint32_t idx : pick) tuple.push_back(sorted[idx]);
        DiversityValue value = mode == DiversityMode::MaxMin
                                   ? min_diversity(tuple)
                                   : DiversityValue::finite(sum_diversity(tuple));
        if (first || result.optimum < value) {
            result.optimum = value;
            result.witness = std::move(tuple);
            first = false;
        }
        // advance the non-decreasing (tuple) / strictly increasing (set) odometer
        exhausted = true;
        std::size_t i = k;
        while (i-- > 0) {
            std::uint32_t limit = semantics == SelectionSemantics::Tuple
                                      ? static_cast<std::uint32_t>(n - 1)
                                      : static_cast<std::uint32_t>(n - k + i);
            if (pick[i] < limit) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) {
                    pick[j] = semantics == SelectionSemantics::Tuple ? pick[i] : pick[j - 1] + 1;
                }
                exhausted = false;
                break;
            }
        }
    }
    result.yes = result.optimum.at_least(delta);
    return result;
}

std::vector<TokenString> brute_lcs_set(const TokenString& s1, const TokenString& s2,
                                       const OracleBudget& budget) {
    if (!same_alphabet(s1.alphabet(), s2.alphabet())) {
        throw InvalidInputError("LCS inputs must share an alphabet");
    }
    return lcs_by_subsequence_enumeration({s1, s2}, budget);
}

std::vector<TokenString> brute_lcs_set_multi(const std::vector<TokenString>& strings,
                                             const OracleBudget& budget) {
    if (strings.empty()) throw InvalidInputError("LCS of an empty family is undefined");
    for (std::size_t i = 1; i < strings.size(); ++i) {
        if (!same_alphabet(strings[0].alphabet(), strings[i].alphabet())) {
            throw InvalidInputError("LCS inputs must share an alphabet");
        }
    }
    return lcs_by_subsequence_enumeration(strings, budget);
}

std::vector<TokenString> lcs_set_memo(const TokenString& s1, const TokenString& s2,
                                      const OracleBudget& budget) {
    if (!same_alphabet(s1.alphabet(), s2.alphabet())) {
        throw InvalidInputError("LCS inputs must share an alphabet");
    }
    const std::vector<SymbolId>& a = s1.symbols();
    const std::vector<SymbolId>& b = s2.symbols();
    const std::size_t la = a.size(), lb = b.size();

    std::vector<std::vector<std::uint32_t>> len(la + 1, std::vector<std::uint32_t>(lb + 1, 0));
    for (std::size_t i = 1; i <= la; ++i) {
        for (std::size_t j = 1; j <= lb; ++j) {
            len[i][j] = a[i - 1] == b[j - 1]
                            ? len[i - 1][j - 1] + 1
                            : std::max(len[i - 1][j], len[i][j - 1]);
        }
    }

    Deadline deadline(budget);
    std::uint64_t stored = 0;
    using Key = std::uint64_t;
    std::unordered_map<Key, std::set<std::vector<SymbolId>>> memo;
    auto key = [&](std::size_t i, std::size_t j) { return (static_cast<Key>(i) << 32) | j; };

    std::function<const std::set<std::vector<SymbolId>>&(std::size_t, std::size_t)> solve =
        [&](std::size_t i, std::size_t j) -> const std::set<std::vector<SymbolId>>& {
        auto it = memo.find(key(i, j));
        if (it != memo.end()) return it->second;
        deadline.poll();
        std::set<std::vector<SymbolId>> out;
        if (i == 0 || j == 0 || len[i][j] == 0) {
            out.insert(std::vector<SymbolId>{});
        } else if (a[i - 1] == b[j - 1]) {
            for (const auto& w : solve(i - 1, j - 1)) {
                std::vector<SymbolId> ext = w;
                ext.push_back(a[i - 1]);
                out.insert(std::move(ext));
            }
        } else {
            if (len[i - 1][j] == len[i][j]) {
                const auto& sub = solve(i - 1, j);
                out.insert(sub.begin(), sub.end());
            }
            if (len[i][j - 1] == len[i][j]) {
                const auto& sub = solve(i, j - 1);
                out.insert(sub.begin(), sub.end());
            }
        }
        stored += out.size();
        if (stored > 2'000'000) throw BudgetError("memoized LCS-set budget exceeded");
        return memo.emplace(key(i, j), std::move(out)).first->second;
    };

    const auto& sets = solve(la, lb);
    std::vector<TokenString> out;
    out.reserve(sets.size());
    for (const auto& symbols : sets) out.emplace_back(s1.alphabet(), symbols);
    return out;
}

BruteFarthestResult brute_farthest(const StringSet& set, const std::vector<TokenString>& reference,
                                   const OracleBudget& budget) {
    if (set.size() > budget.max_tuples) throw BudgetError("candidate scan budget exceeded");
    for (const TokenString& x : reference) {
        if (x.length() != set.r() || !same_alphabet(x.alphabet(), set.alphabet())) {
            throw InvalidInputError("reference strings must match the set");
        }
    }
    std::vector<TokenString> sorted = set.members();
    std::sort(sorted.begin(), sorted.end());
    BruteFarthestResult best{sorted.front(), 0};
    bool first = true;
    for (const TokenString& cand : sorted) {
        std::uint64_t value = 0;
        for (const TokenString& x : reference) value += hamming(cand, x);
        if (first || value > best.value) {
            best = {cand, value};
            first = false;
        }
    }
    return best;
}

bool brute_matching_3dm(const ThreeDmInstance& inst, const OracleBudget& budget) {
    if (inst.triples.size() >= 63 || (1ull << inst.triples.size()) > budget.max_tuples) {
        throw BudgetError("3DM subset enumeration budget exceeded");
    }
    if (inst.n > 31) throw BudgetError("3DM coordinate range too large");
    Deadline deadline(budget);

    // choose/skip search over the family with per-coordinate used-value masks
    std::function<bool(std::size_t, unsigned, std::array<std::uint32_t, 3>)> go =
        [&](std::size_t idx, unsigned chosen, std::array<std::uint32_t, 3> used) -> bool {
        if (chosen == inst.n) return true;
        if (idx == inst.triples.size()) return false;
        if (inst.triples.size() - idx < inst.n - chosen) return false;
        deadline.poll();
        const auto& t = inst.triples[idx];
        bool fits = true;
        for (unsigned c = 0; c < 3; ++c) {
            if (used[c] >> (t[c] - 1) & 1) fits = false;
        }
        if (fits) {
            auto next = used;
            for (unsigned c = 0; c < 3; ++c) next[c] |= 1u << (t[c] - 1);
            if (go(idx + 1, chosen + 1, next)) return true;
        }
        return go(idx + 1, chosen, used);
    };
    return go(0, 0, {0, 0, 0});
}

bool brute_clique(const UGraph& g, unsigned k, const OracleBudget& budget) {
    if (k == 0) throw InvalidInputError("k must be at least 1");
    if (k > g.n) return false;
    if (choose_sat(g.n, k, budget.max_tuples) > budget.max_tuples) {
        throw BudgetError("clique subset enumeration budget exceeded");
    }
    std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
    for (auto [i, j] : g.edges) adj[i][j] = adj[j][i] = 1;

    Deadline deadline(budget);
    std::vector<unsigned> pick(k);
    for (unsigned i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
        deadline.poll();
        bool complete = true;
        for (unsigned i = 0; i < k && complete; ++i) {
            for (unsigned j = i + 1; j < k && complete; ++j) {
                complete = adj[pick[i]][pick[j]];
            }
        }
        if (complete) return true;
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] < g.n - (k - 1 - i)) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
    }
}

}  // namespace divstr
