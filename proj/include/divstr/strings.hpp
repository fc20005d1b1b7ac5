#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "divstr/errors.hpp"

namespace divstr {

using SymbolId = std::uint32_t;

/// Ordered list of distinct tokens. A token may be longer than one character
/// (reduction alphabets use names like "a:1:2"), so strings are stored as
/// token indices rather than raw characters.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const { return tokens_.size(); }
    const std::string& token(SymbolId id) const;
    const std::vector<std::string>& tokens() const { return tokens_; }

    std::optional<SymbolId> find(std::string_view token) const;
    /// Like find(), but throws InvalidInputError for unknown tokens.
    SymbolId require(std::string_view token) const;

    /// True when every token is a single character, in which case strings
    /// may be written without separators.
    bool single_char() const { return single_char_; }

    bool operator==(const Alphabet& other) const { return tokens_ == other.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
    bool single_char_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> tokens);

/// True when both strings may be compared position-wise (same alphabet).
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// A fixed-length string stored as indices into its alphabet.
class TokenString {
public:
    TokenString(AlphabetPtr alphabet, std::vector<SymbolId> symbols);

    /// Parses a whitespace-separated token list. Over a single-character
    /// alphabet an unseparated word like "ABADD" is also accepted.
    static TokenString parse(const AlphabetPtr& alphabet, std::string_view text);

    std::size_t length() const { return symbols_.size(); }
    SymbolId operator[](std::size_t i) const { return symbols_[i]; }
    const std::vector<SymbolId>& symbols() const { return symbols_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }

    /// Tokens joined for display: concatenated over single-character
    /// alphabets, space-separated otherwise.
    std::string display() const;

    bool operator==(const TokenString& other) const;
    bool operator!=(const TokenString& other) const { return !(*this == other); }
    /// Lexicographic comparison by symbol index; assumes a shared alphabet.
    bool operator<(const TokenString& other) const { return symbols_ < other.symbols_; }

private:
    AlphabetPtr alphabet_;
    std::vector<SymbolId> symbols_;
};

/// Min diversity of a set with fewer than two elements is infinite; every
/// other diversity value is a plain non-negative integer.
class DiversityValue {
public:
    static DiversityValue infinite() { return DiversityValue(true, 0); }
    static DiversityValue finite(std::uint64_t v) { return DiversityValue(false, v); }

    bool is_infinite() const { return infinite_; }
    std::uint64_t value() const;

    /// Infinite compares above every threshold.
    bool at_least(std::uint64_t threshold) const { return infinite_ || value_ >= threshold; }

    std::string display() const;

    bool operator==(const DiversityValue& other) const {
        return infinite_ == other.infinite_ && (infinite_ || value_ == other.value_);
    }
    bool operator<(const DiversityValue& other) const {
        if (infinite_) return false;
        if (other.infinite_) return true;
        return value_ < other.value_;
    }

private:
    DiversityValue(bool inf, std::uint64_t v) : infinite_(inf), value_(v) {}
    bool infinite_;
    std::uint64_t value_;
};

/// Non-empty set of pairwise distinct strings of one common length.
class StringSet {
public:
    StringSet(AlphabetPtr alphabet, std::vector<TokenString> members);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<TokenString>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t r() const { return r_; }

private:
    AlphabetPtr alphabet_;
    std::vector<TokenString> members_;
    std::size_t r_;
};

/// Number of positions where the two strings disagree.
std::uint64_t hamming(const TokenString& x, const TokenString& y);

/// Sum of hamming() over all unordered pairs; 0 for fewer than two strings.
std::uint64_t sum_diversity(const std::vector<TokenString>& strings);

/// Minimum of hamming() over all unordered pairs; infinite for fewer than two.
DiversityValue min_diversity(const std::vector<TokenString>& strings);

/// Concatenated per-position one-hot vectors of dimension r*sigma. Every
/// coordinate is a half-integer; values are stored doubled (0 or 1) so the
/// embedding stays exact.
std::vector<std::int64_t> l1_embed(const TokenString& x);

/// L1 distance between two embeddings, in the same doubled scale as
/// l1_embed(): divide by 2 for the actual distance.
std::uint64_t l1_distance_doubled(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b);

}  // namespace divstr
