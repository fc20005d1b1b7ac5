#include "divstr/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace divstr {

namespace {

// Lines with the comment part stripped, paired with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string word;
        if (probe >> word) out.emplace_back(number, line);
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> words;
    std::istringstream in(line);
    std::string w;
    while (in >> w) words.push_back(w);
    return words;
}

AlphabetPtr parse_alphabet_line(std::size_t number, const std::string& line) {
    std::vector<std::string> words = split(line);
    if (words.empty() || words[0] != "alphabet") {
        fail(number, "expected an 'alphabet' directive");
    }
    words.erase(words.begin());
    if (words.empty()) fail(number, "alphabet needs at least one token");
    try {
        return make_alphabet(std::move(words));
    } catch (const InvalidInputError& e) {
        fail(number, e.what());
    }
}

StringList read_strings_impl(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty string-set file");
    StringList out;
    out.alphabet = parse_alphabet_line(lines[0].first, lines[0].second);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        try {
            out.strings.push_back(TokenString::parse(out.alphabet, lines[i].second));
        } catch (const InvalidInputError& e) {
            fail(lines[i].first, e.what());
        }
    }
    if (out.strings.empty()) throw ParseError("string-set file contains no strings");
    return out;
}

template <typename T>
T from_file(const std::string& path, T (*reader)(std::istream&)) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    return reader(in);
}

}  // namespace

StringSet read_string_set(std::istream& in) {
    StringList list = read_strings_impl(in);
    return StringSet(list.alphabet, std::move(list.strings));
}

StringSet read_string_set_file(const std::string& path) {
    return from_file(path, read_string_set);
}

StringList read_string_list(std::istream& in) { return read_strings_impl(in); }

StringList read_string_list_file(const std::string& path) {
    return from_file(path, read_string_list);
}

void write_string_set(std::ostream& out, const StringSet& set,
                      const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "alphabet";
    for (const std::string& tok : set.alphabet()->tokens()) out << ' ' << tok;
    out << "\n";
    for (const TokenString& s : set.members()) out << s.display() << "\n";
}

StringDag read_dag(std::istream& in) {
    auto lines = content_lines(in);
    if (lines.empty()) throw ParseError("empty DAG file");

    RawDag raw;
    std::unordered_map<std::string, VertexId> by_name;
    bool saw_header = false;

    auto vertex_ref = [&](std::size_t number, const std::string& name) {
        auto it = by_name.find(name);
        if (it == by_name.end()) fail(number, "vertex '" + name + "' used before declaration");
        return it->second;
    };

    for (auto& [number, line] : lines) {
        std::vector<std::string> words = split(line);
        const std::string& directive = words[0];
        if (directive == "dag") {
            if (saw_header) fail(number, "duplicate 'dag' header");
            if (words.size() != 2) fail(number, "usage: dag <r>");
            long r = 0;
            try {
                r = std::stol(words[1]);
            } catch (...) {
                fail(number, "'" + words[1] + "' is not a number");
            }
            if (r < 1) fail(number, "r must be at least 1");
            raw.declared_r = static_cast<std::size_t>(r);
            saw_header = true;
        } else if (directive == "alphabet") {
            if (raw.alphabet) fail(number, "duplicate 'alphabet' directive");
            raw.alphabet = parse_alphabet_line(number, line);
        } else if (directive == "vertex") {
            if (words.size() != 2) fail(number, "usage: vertex <id>");
            if (by_name.count(words[1])) fail(number, "duplicate vertex '" + words[1] + "'");
            by_name.emplace(words[1], static_cast<VertexId>(raw.vertex_names.size()));
            raw.vertex_names.push_back(words[1]);
        } else if (directive == "edge") {
            if (words.size() != 4) fail(number, "usage: edge <from> <label> <to>");
            if (!raw.alphabet) fail(number, "edge before 'alphabet' directive");
            auto label = raw.alphabet->find(words[2]);
            if (!label) fail(number, "unknown label token '" + words[2] + "'");
            raw.edges.push_back({vertex_ref(number, words[1]), *label, vertex_ref(number, words[3])});
        } else if (directive == "source") {
            if (words.size() != 2) fail(number, "usage: source <id>");
            raw.declared_source = vertex_ref(number, words[1]);
        } else if (directive == "sink") {
            if (words.size() != 2) fail(number, "usage: sink <id>");
            raw.declared_sink = vertex_ref(number, words[1]);
        } else {
            fail(number, "unknown directive '" + directive + "'");
        }
    }
    if (!saw_header) throw ParseError("missing 'dag <r>' header");
    if (!raw.alphabet) throw ParseError("missing 'alphabet' directive");
    return validate(raw);
}

StringDag read_dag_file(const std::string& path) { return from_file(path, read_dag); }

void write_dag(std::ostream& out, const StringDag& dag,
               const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "dag " << dag.r() << "\n";
    out << "alphabet";
    for (const std::string& tok : dag.alphabet()->tokens()) out << ' ' << tok;
    out << "\n";
    for (VertexId v = 0; v < dag.vertex_count(); ++v) {
        out << "vertex " << dag.vertex_name(v) << "\n";
    }
    out << "source " << dag.vertex_name(dag.source()) << "\n";
    out << "sink " << dag.vertex_name(dag.sink()) << "\n";
    for (const DagEdge& e : dag.edges()) {
        out << "edge " << dag.vertex_name(e.from) << ' ' << dag.alphabet()->token(e.label) << ' '
            << dag.vertex_name(e.to) << "\n";
    }
}

namespace {

unsigned parse_header_n(const std::vector<std::pair<std::size_t, std::string>>& lines,
                        const char* what) {
    if (lines.empty()) throw ParseError(std::string("empty ") + what + " file");
    std::vector<std::string> words = split(lines[0].second);
    if (words.size() != 2 || words[0] != "n") fail(lines[0].first, "expected header 'n <int>'");
    long n = 0;
    try {
        n = std::stol(words[1]);
    } catch (...) {
        fail(lines[0].first, "'" + words[1] + "' is not a number");
    }
    if (n < 1) fail(lines[0].first, "n must be at least 1");
    return static_cast<unsigned>(n);
}

unsigned parse_coord(std::size_t number, const std::string& word, unsigned n) {
    long v = 0;
    try {
        v = std::stol(word);
    } catch (...) {
        fail(number, "'" + word + "' is not a number");
    }
    if (v < 1 || v > static_cast<long>(n)) fail(number, "value out of [1..n]");
    return static_cast<unsigned>(v);
}

}  // namespace

ThreeDmInstance read_3dm(std::istream& in) {
    auto lines = content_lines(in);
    ThreeDmInstance inst;
    inst.n = parse_header_n(lines, "3DM");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> words = split(lines[i].second);
        if (words.size() != 3) fail(lines[i].first, "expected a triple 'x y z'");
        std::array<unsigned, 3> t;
        for (unsigned c = 0; c < 3; ++c) t[c] = parse_coord(lines[i].first, words[c], inst.n);
        if (std::find(inst.triples.begin(), inst.triples.end(), t) != inst.triples.end()) {
            fail(lines[i].first, "duplicate triple");
        }
        inst.triples.push_back(t);
    }
    if (inst.triples.empty()) throw ParseError("3DM file contains no triples");
    return inst;
}

ThreeDmInstance read_3dm_file(const std::string& path) { return from_file(path, read_3dm); }

UGraph read_graph(std::istream& in) {
    auto lines = content_lines(in);
    UGraph g;
    g.n = parse_header_n(lines, "graph");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> words = split(lines[i].second);
        if (words.size() != 2) fail(lines[i].first, "expected an edge 'i j'");
        unsigned a = parse_coord(lines[i].first, words[0], g.n);
        unsigned b = parse_coord(lines[i].first, words[1], g.n);
        if (a == b) fail(lines[i].first, "self-loops are not allowed");
        auto e = std::minmax(a, b);
        std::pair<unsigned, unsigned> edge{e.first, e.second};
        if (std::find(g.edges.begin(), g.edges.end(), edge) != g.edges.end()) {
            fail(lines[i].first, "duplicate edge");
        }
        g.edges.push_back(edge);
    }
    return g;
}

UGraph read_graph_file(const std::string& path) { return from_file(path, read_graph); }

}  // namespace divstr
