#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divstr/sigma_dag.hpp"

namespace divstr {

enum class DiversityMode { MaxMin, MaxSum };

const char* to_string(DiversityMode mode);

struct SolveStats {
    std::uint64_t states = 0;       // distinct (vertex-tuple, weights) entries
    std::uint64_t transitions = 0;  // state updates attempted
    std::uint64_t max_entry = 0;    // largest stored weight entry
    std::uint32_t repetitions = 0;  // color-coding repetitions executed
};

struct SolveResult {
    bool yes = false;
    std::vector<TokenString> witness;          // K strings when yes
    std::optional<DiversityValue> achieved;    // diversity of the witness, untruncated
    SolveStats stats;
};

/// Decides whether K source-sink paths exist whose pairwise Hamming distances
/// are all at least delta. The DP tracks, per depth layer, every reachable
/// pair (vertex tuple, delta-truncated distance matrix); only reached states
/// are stored. Selection is over K-tuples, so repeated strings are allowed;
/// for delta >= 1 duplicates exclude themselves (distance 0).
///
/// `cap` overrides the truncation level of stored entries (defaults to the
/// exact level min(delta, max achievable)); raising it must not change the
/// decision and exists for tests.
SolveResult solve_maxmin(const StringDag& dag, unsigned k, std::uint64_t delta,
                         std::optional<std::uint64_t> cap = std::nullopt);

/// Same scheme with a single truncated scalar: the sum of all pairwise
/// distances. YES iff some K-tuple reaches sum >= delta.
SolveResult solve_maxsum(const StringDag& dag, unsigned k, std::uint64_t delta,
                         std::optional<std::uint64_t> cap = std::nullopt);

SolveResult solve_diverse(const StringDag& dag, DiversityMode mode, unsigned k,
                          std::uint64_t delta);

struct OptimizeResult {
    DiversityValue optimum = DiversityValue::finite(0);
    std::vector<TokenString> witness;
    SolveStats stats;
    std::uint32_t solver_calls = 0;
};

/// Largest threshold still answered YES, by binary search on delta.
/// For MaxMin with K = 1 the optimum is infinite.
OptimizeResult optimize_diversity(const StringDag& dag, DiversityMode mode, unsigned k);

}  // namespace divstr
