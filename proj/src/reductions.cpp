#include "divstr/reductions.hpp"

#include <algorithm>

namespace divstr {

DiverseInstance reduce_3dm(const ThreeDmInstance& inst) {
    if (inst.n == 0) throw InvalidInputError("3DM instance needs n >= 1");
    if (inst.triples.empty()) throw InvalidInputError("3DM instance needs a non-empty family");

    static const char* kPrefix[3] = {"a:", "b:", "c:"};
    std::vector<std::string> tokens;
    tokens.reserve(3 * inst.n);
    for (unsigned coord = 0; coord < 3; ++coord) {
        for (unsigned v = 1; v <= inst.n; ++v) {
            tokens.push_back(kPrefix[coord] + std::to_string(v));
        }
    }
    AlphabetPtr alpha = make_alphabet(std::move(tokens));

    std::vector<TokenString> members;
    members.reserve(inst.triples.size());
    for (const auto& t : inst.triples) {
        std::vector<SymbolId> symbols(3);
        for (unsigned coord = 0; coord < 3; ++coord) {
            if (t[coord] < 1 || t[coord] > inst.n) {
                throw InvalidInputError("triple coordinate out of [1..n]");
            }
            symbols[coord] = coord * inst.n + (t[coord] - 1);
        }
        members.emplace_back(alpha, std::move(symbols));
    }

    const std::uint64_t pairs = static_cast<std::uint64_t>(inst.n) * (inst.n - 1) / 2;
    return DiverseInstance{StringSet(alpha, std::move(members)), inst.n, 3, 3 * pairs};
}

CliqueReduction reduce_clique(const UGraph& g, unsigned k) {
    if (g.n < 2) throw InvalidInputError("clique reduction needs n >= 2");
    if (k < 1 || k > g.n) throw InvalidInputError("clique parameter must lie in [1..n]");

    std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
    for (auto [i, j] : g.edges) {
        if (i < 1 || j < 1 || i > g.n || j > g.n || i == j) {
            throw InvalidInputError("graph edge out of range");
        }
        adj[i][j] = adj[j][i] = 1;
    }

    std::vector<std::string> tokens{"0"};
    for (unsigned v = 1; v <= g.n; ++v) tokens.push_back(std::to_string(v));
    AlphabetPtr alpha = make_alphabet(std::move(tokens));

    std::vector<std::pair<unsigned, unsigned>> positions;
    for (unsigned i = 1; i <= g.n; ++i) {
        for (unsigned j = i + 1; j <= g.n; ++j) positions.emplace_back(i, j);
    }

    std::vector<TokenString> members;
    for (unsigned v = 1; v <= g.n; ++v) {
        std::vector<SymbolId> symbols;
        symbols.reserve(positions.size());
        for (auto [i, j] : positions) {
            bool in_pair = v == i || v == j;
            bool non_edge = !adj[i][j];
            symbols.push_back(in_pair && non_edge ? 0 : v);
        }
        TokenString row(alpha, std::move(symbols));
        if (std::find(members.begin(), members.end(), row) == members.end()) {
            members.push_back(std::move(row));
        }
    }

    return CliqueReduction{StringSet(alpha, std::move(members)), k, positions.size()};
}

SegmentLengths segment_lengths(std::size_t s, std::size_t i) {
    if (i < 1 || i > s) throw InvalidInputError("segment index out of [1..s]");
    return SegmentLengths{s - i + 1, i - 1, s - i, i};
}

LcsEncoding encode_as_lcs(const StringSet& set, unsigned k, std::uint64_t delta,
                          DiversityMode mode) {
    const std::size_t s = set.size();
    if (s < 2) throw InvalidInputError("LCS encoding needs a set of at least two strings");
    if (set.r() == 0) throw InvalidInputError("LCS encoding needs strings of positive length");

    // Extended alphabet: the original tokens keep their indices, followed by
    // the padding symbols a:i:j then b:i:j for i, j in [1..s].
    std::vector<std::string> tokens = set.alphabet()->tokens();
    const std::size_t sigma = tokens.size();
    for (std::size_t i = 1; i <= s; ++i) {
        for (std::size_t j = 1; j <= s; ++j) {
            tokens.push_back("a:" + std::to_string(i) + ":" + std::to_string(j));
        }
    }
    for (std::size_t i = 1; i <= s; ++i) {
        for (std::size_t j = 1; j <= s; ++j) {
            tokens.push_back("b:" + std::to_string(i) + ":" + std::to_string(j));
        }
    }
    AlphabetPtr gamma = make_alphabet(std::move(tokens));
    auto pad_a = [&](std::size_t i, std::size_t j) {
        return static_cast<SymbolId>(sigma + (i - 1) * s + (j - 1));
    };
    auto pad_b = [&](std::size_t i, std::size_t j) {
        return static_cast<SymbolId>(sigma + s * s + (i - 1) * s + (j - 1));
    };

    // Per member i: P_i = a:i:1..a:i:s splits into A_i (prefix) and Abar_i;
    // Q_i = b:i:1..b:i:s splits into Bbar_i and B_i (suffix);
    // W_i = Abar_i X_i Bbar_i and T_i = P_i X_i Q_i = A_i W_i B_i.
    std::vector<std::vector<SymbolId>> seg_a(s), seg_w(s), seg_b(s);
    std::vector<TokenString> padded;
    padded.reserve(s);
    for (std::size_t i = 1; i <= s; ++i) {
        SegmentLengths len = segment_lengths(s, i);
        const std::vector<SymbolId>& x = set.members()[i - 1].symbols();
        std::vector<SymbolId>& a = seg_a[i - 1];
        std::vector<SymbolId>& w = seg_w[i - 1];
        std::vector<SymbolId>& b = seg_b[i - 1];
        for (std::size_t j = 1; j <= len.a; ++j) a.push_back(pad_a(i, j));
        for (std::size_t j = len.a + 1; j <= s; ++j) w.push_back(pad_a(i, j));
        w.insert(w.end(), x.begin(), x.end());
        for (std::size_t j = 1; j <= len.b_bar; ++j) w.push_back(pad_b(i, j));
        for (std::size_t j = len.b_bar + 1; j <= s; ++j) b.push_back(pad_b(i, j));

        std::vector<SymbolId> t;
        t.reserve(set.r() + 2 * s);
        for (std::size_t j = 1; j <= s; ++j) t.push_back(pad_a(i, j));
        t.insert(t.end(), x.begin(), x.end());
        for (std::size_t j = 1; j <= s; ++j) t.push_back(pad_b(i, j));
        padded.emplace_back(gamma, std::move(t));
    }

    std::vector<SymbolId> s1;
    s1.reserve(s * (set.r() + 2 * s));
    for (std::size_t i = 0; i < s; ++i) s1.insert(s1.end(), seg_a[i].begin(), seg_a[i].end());
    for (std::size_t i = 0; i < s; ++i) s1.insert(s1.end(), seg_w[i].begin(), seg_w[i].end());
    for (std::size_t i = 0; i < s; ++i) s1.insert(s1.end(), seg_b[i].begin(), seg_b[i].end());

    std::vector<SymbolId> s2;
    s2.reserve(s * (set.r() + 2 * s));
    for (std::size_t i = s; i-- > 0;) {
        s2.insert(s2.end(), seg_a[i].begin(), seg_a[i].end());
        s2.insert(s2.end(), seg_w[i].begin(), seg_w[i].end());
        s2.insert(s2.end(), seg_b[i].begin(), seg_b[i].end());
    }

    LcsEncoding out{TokenString(gamma, std::move(s1)), TokenString(gamma, std::move(s2)),
                    std::move(padded), s, 0, mode};
    const std::uint64_t pairs = static_cast<std::uint64_t>(k) * (k > 0 ? k - 1 : 0) / 2;
    out.delta_shifted =
        mode == DiversityMode::MaxMin ? delta + 2 * s : delta + 2 * s * pairs;
    return out;
}

}  // namespace divstr
