#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "divstr/reductions.hpp"
#include "divstr/sigma_dag.hpp"

namespace divstr {

// String-set format: first directive line `alphabet <tok> <tok> ...`, then
// one string per non-empty line as whitespace-separated tokens (concatenated
// characters are accepted over single-character alphabets). `#` starts a
// comment anywhere on a line.

StringSet read_string_set(std::istream& in);
StringSet read_string_set_file(const std::string& path);

/// Relaxed variant for LCS inputs: lengths may differ, duplicates allowed.
struct StringList {
    AlphabetPtr alphabet;
    std::vector<TokenString> strings;
};
StringList read_string_list(std::istream& in);
StringList read_string_list_file(const std::string& path);

void write_string_set(std::ostream& out, const StringSet& set,
                      const std::vector<std::string>& comments = {});

// DAG format, one directive per line:
//   dag <r>
//   alphabet <tok> ...
//   vertex <id>
//   edge <from-id> <label-tok> <to-id>
//   source <id>
//   sink <id>
// Vertices must be declared before use; the parser runs validate().

StringDag read_dag(std::istream& in);
StringDag read_dag_file(const std::string& path);
void write_dag(std::ostream& out, const StringDag& dag,
               const std::vector<std::string>& comments = {});

// Instance formats: `n <int>` then one triple `x y z` (3DM) or one edge
// `i j` (graph) per line.

ThreeDmInstance read_3dm(std::istream& in);
ThreeDmInstance read_3dm_file(const std::string& path);
UGraph read_graph(std::istream& in);
UGraph read_graph_file(const std::string& path);

}  // namespace divstr
