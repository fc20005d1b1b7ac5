#pragma once

#include <cstdint>
#include <vector>

#include "divstr/exact_dp.hpp"

namespace divstr {

/// Total map from alphabet symbols to colors, reproducible from its seed.
struct Coloring {
    std::vector<std::uint32_t> color_of;  // indexed by SymbolId
    std::uint32_t num_colors = 0;
    std::uint64_t seed = 0;
};

Coloring random_coloring(const Alphabet& alphabet, std::uint32_t num_colors, std::uint64_t seed);

/// The reduced color-DAG: a trie over color strings with all leaves merged
/// into one sink, together with the correspondence from each trie vertex to
/// the original DAG vertices reachable under its color prefix.
struct ColoredTrie {
    StringDag dag;                                  // over the color alphabet "0".."k-1"
    std::vector<std::vector<VertexId>> origin_sets; // trie vertex -> original vertices
};

/// Breadth-first layered construction: every trie vertex expands all of its
/// corresponding original vertices, so the represented language is exactly
/// the coloring applied to the input language.
ColoredTrie build_colored_trie(const StringDag& dag, const Coloring& coloring);

/// ceil(ln(100) / p) with p = (rK)! / (rK)^(rK), capped.
std::uint32_t default_repetitions(unsigned k, std::size_t r, std::uint32_t cap = 100'000);

/// Randomized solver for parameters (K, r): repeatedly draws an rK-coloring,
/// reduces the DAG to its colored trie, runs the exact DP there (the colored
/// label inequality lower-bounds the true one), and on YES maps the colored
/// witness back to original strings and re-verifies the true diversity.
/// YES answers are always verified; NO answers are one-sided.
/// Repetitions run in waves of `threads`; the first verified YES by
/// repetition index wins, so results are deterministic given the seed.
SolveResult fpt_solve(const StringDag& dag, DiversityMode mode, unsigned k, std::uint64_t delta,
                      std::uint64_t seed, std::uint32_t repetitions, unsigned threads = 1);

}  // namespace divstr
