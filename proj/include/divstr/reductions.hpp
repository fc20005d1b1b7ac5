#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "divstr/exact_dp.hpp"

namespace divstr {

/// Three-dimensional matching instance: a family of triples over [n]^3.
struct ThreeDmInstance {
    unsigned n = 0;
    std::vector<std::array<unsigned, 3>> triples;  // 1-based coordinates, distinct
};

/// Simple undirected graph on vertices 1..n with normalized edges (i < j).
struct UGraph {
    unsigned n = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;
};

struct DiverseInstance {
    StringSet strings;
    unsigned k;
    std::uint64_t delta_min;
    std::uint64_t delta_sum;
};

/// Views the triple family as 3-strings over a position-tagged alphabet
/// (tokens a:v, b:v, c:v per coordinate). The family has a perfect matching
/// of size n iff the output is a YES instance at K = n with threshold 3
/// (largest-min) or 3 * C(K,2) (largest-sum).
DiverseInstance reduce_3dm(const ThreeDmInstance& inst);

struct CliqueReduction {
    StringSet strings;
    unsigned k;
    std::uint64_t delta;  // equals the string length C(n,2)
};

/// One string per vertex over alphabet [n] union {0}, positions indexed by
/// the vertex pairs in lexicographic order: position e gets 0 when the vertex
/// belongs to e and e is a non-edge, its own number otherwise. The graph has
/// a K-clique iff the output is a YES instance at threshold r. Vertices whose
/// rows coincide are merged (identical rows can never be jointly selected).
CliqueReduction reduce_clique(const UGraph& g, unsigned k);

/// Lengths (|A_i|, |Abar_i|, |Bbar_i|, |B_i|) of the four padding segments
/// for set size s and index i in [1..s]: (s-i+1, i-1, s-i, i).
struct SegmentLengths {
    std::size_t a;
    std::size_t a_bar;
    std::size_t b_bar;
    std::size_t b;
};

SegmentLengths segment_lengths(std::size_t s, std::size_t i);

/// Two strings whose LCS set is exactly a padded copy of the input set.
struct LcsEncoding {
    TokenString s1;
    TokenString s2;
    std::vector<TokenString> padded;   // T_i = P_i X_i Q_i, in input order
    std::size_t set_size = 0;          // s
    std::uint64_t delta_shifted = 0;   // delta + 2s (min) or + 2s*C(K,2) (sum)
    DiversityMode mode = DiversityMode::MaxMin;
};

/// Embeds the diverse-selection instance (L, K, delta) into a diverse-LCS
/// instance on two strings of length s(r+2s): each member X_i is wrapped into
/// T_i = P_i X_i Q_i with fresh per-index padding symbols, arranged so that
/// LCS(S1, S2) = {T_1..T_s} and every pairwise distance shifts by exactly 2s.
LcsEncoding encode_as_lcs(const StringSet& set, unsigned k, std::uint64_t delta,
                          DiversityMode mode);

}  // namespace divstr
