#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "divstr/exact_dp.hpp"

namespace divstr {

struct FarthestResult {
    TokenString best;
    std::uint64_t value = 0;  // capped sum of distances to the reference set
    SolveStats stats;
};

/// Finds a string of the represented language maximizing the sum of Hamming
/// distances to the reference strings, tracked up to `cap` (pass
/// r * |reference| for the exact optimum). Layered DP with one scalar per
/// vertex and parent records for traceback.
FarthestResult farthest_string(const StringDag& dag, const std::vector<TokenString>& reference,
                               std::uint64_t cap);

/// Same search restricted to strings outside `forbidden`: the DP state gains
/// one bit per forbidden string ("the path so far still equals its prefix"),
/// so exclusion never requires enumerating the language. Returns nullopt when
/// every represented string is forbidden.
std::optional<FarthestResult> farthest_string_excluding(const StringDag& dag,
                                                        const std::vector<TokenString>& reference,
                                                        const std::vector<TokenString>& forbidden,
                                                        std::uint64_t cap);

/// Outer iteration budget: ceil(K(K-1)/(K+1) * ln((K+2)(K-1)^2 / 4)).
unsigned local_search_iterations(unsigned k);

/// Local-search approximation for the largest-sum selection of K distinct
/// strings: runs the budgeted number of passes, each replacing one member by
/// a farthest string outside the current set, keeping a swap only when the
/// whole-set sum does not drop. Initial set is a seeded sample of K distinct
/// strings. Achieves ratio (1 - 2/K).
///
/// `observer`, when set, is called with the current set after initialization
/// and after every outer iteration.
std::vector<TokenString> local_search_maxsum(
    const StringDag& dag, unsigned k, std::uint64_t seed,
    const std::function<void(const std::vector<TokenString>&)>& observer = nullptr);

struct PtasResult {
    std::vector<TokenString> strings;
    std::uint64_t value = 0;
    bool exact_branch = false;
};

/// (1 - epsilon)-approximation for the largest-sum selection: for K < 2/eps
/// the optimum is computed exactly by binary search over the threshold,
/// otherwise the (1 - 2/K) local search already meets the factor.
PtasResult ptas_maxsum(const StringDag& dag, unsigned k, double epsilon, std::uint64_t seed);

}  // namespace divstr
