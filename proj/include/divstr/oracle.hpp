#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "divstr/reductions.hpp"
#include "divstr/strings.hpp"

// Reference implementations by direct enumeration of the defining
// quantifiers. They depend only on the core string types, never on the
// solver modules they are used to check, and abort with BudgetError rather
// than return a partial answer.

namespace divstr {

struct OracleBudget {
    std::uint64_t max_tuples = 1'000'000;
    std::uint64_t max_subsequences = 1ull << 20;
    std::chrono::milliseconds time_ceiling{10'000};
};

enum class SelectionSemantics { Tuple, Set };

struct BruteDiverseResult {
    bool yes = false;
    DiversityValue optimum = DiversityValue::finite(0);
    std::vector<TokenString> witness;
};

/// Exhausts every K-multiset (Tuple) or K-subset (Set) of the string set and
/// reports the best diversity, deciding against the threshold. Ties go to the
/// first candidate in lexicographic order.
BruteDiverseResult brute_diverse(const StringSet& set, unsigned k, std::uint64_t delta,
                                 DiversityMode mode, SelectionSemantics semantics,
                                 const OracleBudget& budget = {});

/// All distinct longest common subsequences, by enumerating every subsequence
/// of the shorter string and filtering. Requires 2^min(|s1|,|s2|) within
/// budget.
std::vector<TokenString> brute_lcs_set(const TokenString& s1, const TokenString& s2,
                                       const OracleBudget& budget = {});

/// Same by subsequence enumeration of the shortest of m strings.
std::vector<TokenString> brute_lcs_set_multi(const std::vector<TokenString>& strings,
                                             const OracleBudget& budget = {});

/// All distinct longest common subsequences of two strings via the classic
/// memoized set recursion on the length table; handles strings too long for
/// subsequence enumeration. Kept separate from the DAG pipeline.
std::vector<TokenString> lcs_set_memo(const TokenString& s1, const TokenString& s2,
                                      const OracleBudget& budget = {});

struct BruteFarthestResult {
    TokenString best;
    std::uint64_t value = 0;
};

/// Linear scan for the member maximizing the distance sum to the reference
/// strings; ties resolve to the lexicographically least member.
BruteFarthestResult brute_farthest(const StringSet& set, const std::vector<TokenString>& reference,
                                   const OracleBudget& budget = {});

/// True iff some n triples are pairwise disjoint in every coordinate.
bool brute_matching_3dm(const ThreeDmInstance& inst, const OracleBudget& budget = {});

/// True iff some K vertices are pairwise adjacent.
bool brute_clique(const UGraph& g, unsigned k, const OracleBudget& budget = {});

}  // namespace divstr
