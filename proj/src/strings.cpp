#include "divstr/strings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace divstr {

const char* to_string(DagDefect defect) {
    switch (defect) {
        case DagDefect::NoVertices: return "no vertices";
        case DagDefect::BadEdge: return "bad edge";
        case DagDefect::DuplicateVertexId: return "duplicate vertex id";
        case DagDefect::Cycle: return "cycle detected";
        case DagDefect::NoSource: return "no source";
        case DagDefect::MultipleSources: return "multiple sources";
        case DagDefect::NoSink: return "no sink";
        case DagDefect::MultipleSinks: return "multiple sinks";
        case DagDefect::OffPathVertex: return "vertex off every source-sink path";
        case DagDefect::InconsistentDepth: return "inconsistent path lengths";
        case DagDefect::LengthMismatch: return "declared length mismatch";
        case DagDefect::DeclarationMismatch: return "declared source/sink mismatch";
    }
    return "unknown defect";
}

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) throw InvalidInputError("alphabet must contain at least one token");
    single_char_ = true;
    for (SymbolId id = 0; id < tokens_.size(); ++id) {
        const std::string& tok = tokens_[id];
        if (tok.empty()) throw InvalidInputError("alphabet token may not be empty");
        for (char c : tok) {
            if (std::isspace(static_cast<unsigned char>(c)) ||
                !std::isprint(static_cast<unsigned char>(c))) {
                throw InvalidInputError("alphabet token contains whitespace or unprintable character: '" + tok + "'");
            }
        }
        if (!index_.emplace(tok, id).second) {
            throw InvalidInputError("duplicate alphabet token: '" + tok + "'");
        }
        if (tok.size() != 1) single_char_ = false;
    }
}

const std::string& Alphabet::token(SymbolId id) const {
    if (id >= tokens_.size()) throw InvalidInputError("symbol id out of range");
    return tokens_[id];
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::require(std::string_view token) const {
    auto id = find(token);
    if (!id) throw InvalidInputError("unknown token: '" + std::string(token) + "'");
    return *id;
}

AlphabetPtr make_alphabet(std::vector<std::string> tokens) {
    return std::make_shared<const Alphabet>(std::move(tokens));
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

TokenString::TokenString(AlphabetPtr alphabet, std::vector<SymbolId> symbols)
    : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
    if (!alphabet_) throw InvalidInputError("string requires an alphabet");
    for (SymbolId s : symbols_) {
        if (s >= alphabet_->size()) throw InvalidInputError("symbol index out of alphabet range");
    }
}

TokenString TokenString::parse(const AlphabetPtr& alphabet, std::string_view text) {
    if (!alphabet) throw InvalidInputError("string requires an alphabet");
    std::vector<std::string> words;
    std::istringstream in{std::string(text)};
    std::string w;
    while (in >> w) words.push_back(w);
    std::vector<SymbolId> symbols;
    if (words.size() == 1 && words[0].size() > 1 && alphabet->single_char()) {
        symbols.reserve(words[0].size());
        for (char c : words[0]) symbols.push_back(alphabet->require(std::string_view(&c, 1)));
    } else {
        symbols.reserve(words.size());
        for (const std::string& word : words) symbols.push_back(alphabet->require(word));
    }
    return TokenString(alphabet, std::move(symbols));
}

std::string TokenString::display() const {
    std::string out;
    bool spaced = !alphabet_->single_char();
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (spaced && i > 0) out += ' ';
        out += alphabet_->token(symbols_[i]);
    }
    return out;
}

bool TokenString::operator==(const TokenString& other) const {
    return symbols_ == other.symbols_ && same_alphabet(alphabet_, other.alphabet_);
}

std::uint64_t DiversityValue::value() const {
    if (infinite_) throw InvalidInputError("infinite diversity has no numeric value");
    return value_;
}

std::string DiversityValue::display() const {
    return infinite_ ? "inf" : std::to_string(value_);
}

StringSet::StringSet(AlphabetPtr alphabet, std::vector<TokenString> members)
    : alphabet_(std::move(alphabet)), members_(std::move(members)) {
    if (!alphabet_) throw InvalidInputError("string set requires an alphabet");
    if (members_.empty()) throw InvalidInputError("string set must be non-empty");
    r_ = members_.front().length();
    for (const TokenString& m : members_) {
        if (!same_alphabet(m.alphabet(), alphabet_)) {
            throw InvalidInputError("string set member uses a different alphabet");
        }
        if (m.length() != r_) {
            throw InvalidInputError("string set members must share one length");
        }
    }
    std::vector<std::vector<SymbolId>> seen;
    seen.reserve(members_.size());
    for (const TokenString& m : members_) seen.push_back(m.symbols());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        throw InvalidInputError("string set members must be pairwise distinct");
    }
}

namespace {

void check_comparable(const TokenString& x, const TokenString& y) {
    if (!same_alphabet(x.alphabet(), y.alphabet())) {
        throw InvalidInputError("hamming distance requires a shared alphabet");
    }
    if (x.length() != y.length()) {
        throw InvalidInputError("hamming distance requires equal lengths");
    }
}

}  // namespace

std::uint64_t hamming(const TokenString& x, const TokenString& y) {
    check_comparable(x, y);
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < x.length(); ++i) {
        if (x[i] != y[i]) ++d;
    }
    return d;
}

std::uint64_t sum_diversity(const std::vector<TokenString>& strings) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            total += hamming(strings[i], strings[j]);
        }
    }
    return total;
}

DiversityValue min_diversity(const std::vector<TokenString>& strings) {
    if (strings.size() < 2) return DiversityValue::infinite();
    std::uint64_t best = UINT64_MAX;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            best = std::min(best, hamming(strings[i], strings[j]));
        }
    }
    return DiversityValue::finite(best);
}

std::vector<std::int64_t> l1_embed(const TokenString& x) {
    std::size_t sigma = x.alphabet()->size();
    std::vector<std::int64_t> out(x.length() * sigma, 0);
    for (std::size_t i = 0; i < x.length(); ++i) {
        out[i * sigma + x[i]] = 1;  // 1 here means the half-integer 0.5
    }
    return out;
}

std::uint64_t l1_distance_doubled(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) {
    if (a.size() != b.size()) throw InvalidInputError("embedding dimensions differ");
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = a[i] - b[i];
        d += static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
    }
    return d;
}

}  // namespace divstr
