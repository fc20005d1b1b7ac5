// End-to-end checks for the command-line tool. Invoked with the binary path
// as the only argument; exercises the documented commands, formats, and exit
// codes through real files and processes.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cout << "[FAIL] " << what << "\n";
    } else {
        std::cout << "[ok] " << what << "\n";
    }
}

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run(const std::string& cmd) {
    CmdResult result;
    FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe)) {
        result.output.append(buffer, n);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: divstr_cli_tests <path-to-divstr>\n";
        return 2;
    }
    const std::string bin = std::string("\"") + argv[1] + "\"";
    fs::path dir = fs::temp_directory_path() / "divstr_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const fs::path six = dir / "six.txt";
    write_file(six,
               "alphabet A B C D E\n"
               "ABADD\nABAEE\nABBDD\nABBEE\nABCDD\nABCEE\n");
    const fs::path pair = dir / "pair.txt";
    write_file(pair, "alphabet A B C D E\nABABCDDEE\nABCBAEEDD\n");
    const fs::path bad_dag = dir / "bad.dag";
    write_file(bad_dag,
               "dag 2\nalphabet A\nvertex s\nvertex x\nvertex t\n"
               "edge s A t\nedge s A x\nedge x A t\n");

    // exact decisions and exit codes
    {
        CmdResult yes = run(bin + " exact --mode maxmin --k 2 --delta 3 --strings " +
                            six.string() + " --witness --no-timing");
        check(yes.exit_code == 0, "exact satisfiable exits 0");
        check(contains(yes.output, "DECISION YES"), "exact prints DECISION YES");
        check(contains(yes.output, "ACHIEVED 3"), "exact prints ACHIEVED 3");
        check(contains(yes.output, "states="), "exact prints solver stats");

        CmdResult no = run(bin + " exact --mode maxmin --k 3 --delta 2 --strings " + six.string());
        check(no.exit_code == 1, "exact unsatisfiable exits 1");
        check(contains(no.output, "DECISION NO"), "exact prints DECISION NO");

        CmdResult opt = run(bin + " exact --mode maxsum --k 3 --optimize --strings " + six.string());
        check(opt.exit_code == 0 && contains(opt.output, "ACHIEVED 7"),
              "exact --optimize reports the optimum 7");
    }

    // deterministic output and the json format
    {
        std::string cmd = bin + " exact --mode maxsum --k 2 --delta 4 --strings " + six.string() +
                          " --witness --no-timing";
        CmdResult a = run(cmd);
        CmdResult b = run(cmd);
        check(a.output == b.output, "output is byte-identical across runs with --no-timing");

        CmdResult j = run(bin + " exact --mode maxmin --k 2 --delta 3 --strings " + six.string() +
                          " --witness --format json --no-timing");
        check(j.exit_code == 0, "json run exits 0");
        nlohmann::json parsed;
        bool parsed_ok = true;
        try {
            parsed = nlohmann::json::parse(j.output);
        } catch (...) {
            parsed_ok = false;
        }
        check(parsed_ok, "json output parses");
        if (parsed_ok) {
            check(parsed["decision"] == "YES", "json decision field");
            check(parsed["value"] == "3", "json value field");
            check(parsed["witness"].size() == 2, "json witness field");
            check(parsed["stats"].contains("states"), "json stats field");
            check(!parsed.contains("time_ms"), "--no-timing drops the timing field");
        }
    }

    // lcs-dag then enumerate round-trip
    {
        fs::path dag_file = dir / "six.dag";
        CmdResult build = run(bin + " lcs-dag --strings " + pair.string() + " --out " +
                              dag_file.string());
        check(build.exit_code == 0, "lcs-dag exits 0");
        check(contains(build.output, "LCS_LENGTH 5"), "lcs-dag reports length 5");

        CmdResult lang = run(bin + " enumerate --dag " + dag_file.string());
        check(lang.exit_code == 0, "enumerate exits 0");
        check(contains(lang.output, "ABADD") && contains(lang.output, "ABCEE"),
              "enumerate lists the running-example strings");

        CmdResult trunc = run(bin + " enumerate --dag " + dag_file.string() + " --limit 2");
        check(contains(trunc.output, "# truncated"), "enumerate flags truncation");

        CmdResult val = run(bin + " validate --dag " + dag_file.string() + " --depths");
        check(val.exit_code == 0 && contains(val.output, "VALID r=5"), "validate accepts the DAG");
        check(contains(val.output, "depth "), "validate --depths lists vertex depths");
    }

    // validation failure surfaces the defect and exits 2
    {
        CmdResult bad = run(bin + " validate --dag " + bad_dag.string());
        check(bad.exit_code == 2, "validate rejects a non-layered DAG with exit 2");
        check(contains(bad.output, "inconsistent path lengths"),
              "validate names the violated property");
    }

    // reductions
    {
        fs::path tdm = dir / "inst.3dm";
        write_file(tdm, "n 2\n1 1 1\n2 2 2\n1 2 2\n");
        fs::path tdm_out = dir / "inst3dm.txt";
        CmdResult red = run(bin + " reduce 3dm --in " + tdm.string() + " --out " + tdm_out.string());
        check(red.exit_code == 0 && contains(red.output, "K 2") &&
                  contains(red.output, "DELTA_MIN 3"),
              "reduce 3dm reports the thresholds");
        CmdResult solve = run(bin + " exact --mode maxmin --k 2 --delta 3 --strings " +
                              tdm_out.string());
        check(solve.exit_code == 0, "reduced 3DM instance with a matching answers YES");

        fs::path graph = dir / "path.graph";
        write_file(graph, "n 3\n1 2\n2 3\n");
        fs::path graph_out = dir / "clique.txt";
        CmdResult cl = run(bin + " reduce clique --in " + graph.string() + " --out " +
                           graph_out.string() + " --k 3");
        check(cl.exit_code == 0 && contains(cl.output, "DELTA 3"), "reduce clique reports delta");
        CmdResult cl_solve = run(bin + " exact --mode maxmin --k 3 --delta 3 --strings " +
                                 graph_out.string());
        check(cl_solve.exit_code == 1, "path graph has no triangle: reduced instance answers NO");

        fs::path two = dir / "two.txt";
        write_file(two, "alphabet A B\nA\nB\n");
        fs::path enc_out = dir / "encoded.txt";
        CmdResult enc = run(bin + " reduce lcs-encode --in " + two.string() + " --out " +
                            enc_out.string() + " --k 2 --delta 1 --mode maxmin");
        check(enc.exit_code == 0 && contains(enc.output, "DELTA_SHIFTED 5"),
              "lcs-encode reports the shifted threshold");
        std::ifstream enc_in(enc_out);
        std::stringstream enc_text;
        enc_text << enc_in.rdbuf();
        check(contains(enc_text.str(), "# DELTA_SHIFTED 5"),
              "encoded file carries the threshold comment");

        // full pipeline: the encoded pair's LCS DAG decides at the shifted
        // threshold exactly like the original set at the original one
        fs::path enc_dag = dir / "encoded.dag";
        CmdResult enc_build = run(bin + " lcs-dag --strings " + enc_out.string() + " --out " +
                                  enc_dag.string());
        check(enc_build.exit_code == 0 && contains(enc_build.output, "LCS_LENGTH 5"),
              "encoded pair has LCS length r + 2s");
        CmdResult enc_yes = run(bin + " exact --mode maxmin --k 2 --delta 5 --dag " +
                                enc_dag.string());
        check(enc_yes.exit_code == 0, "shifted instance answers YES like the original");
        CmdResult enc_no = run(bin + " exact --mode maxmin --k 2 --delta 6 --dag " +
                               enc_dag.string());
        check(enc_no.exit_code == 1, "shifted instance answers NO above the shifted threshold");
    }

    // oracle, ptas, fpt
    {
        CmdResult oracle = run(bin + " oracle --mode maxsum --k 3 --strings " + six.string() +
                               " --witness");
        check(oracle.exit_code == 0 && contains(oracle.output, "ACHIEVED 7"),
              "oracle reports the exhaustive optimum");
        CmdResult set_sem = run(bin + " oracle --mode maxmin --k 2 --delta 1 --semantics set" +
                                " --strings " + six.string());
        check(set_sem.exit_code == 0, "oracle accepts set semantics");

        CmdResult ptas = run(bin + " ptas --k 3 --eps 0.1 --strings " + six.string());
        check(ptas.exit_code == 0 && contains(ptas.output, "VALUE 7"),
              "ptas reports the exact value on the small-k branch");

        CmdResult fpt = run(bin + " fpt --mode maxmin --k 2 --delta 3 --strings " + six.string() +
                            " --witness");
        check(fpt.exit_code == 0 && contains(fpt.output, "DECISION YES"),
              "fpt answers YES on the satisfiable fixture");
        CmdResult fpt_no = run(bin + " fpt --mode maxmin --k 3 --delta 2 --reps 20 --strings " +
                               six.string());
        check(fpt_no.exit_code == 1, "fpt answers NO on the unsatisfiable fixture");
        CmdResult fpt_par = run(bin + " fpt --mode maxmin --k 2 --delta 3 --threads 4 --strings " +
                                six.string());
        check(fpt_par.exit_code == 0 && contains(fpt_par.output, "DECISION YES"),
              "fpt with worker threads reaches the same decision");
    }

    // usage and budget errors
    {
        CmdResult usage = run(bin + " exact --mode maxmin --k 2 --frobnicate");
        check(usage.exit_code == 2, "unknown flag exits 2");
        CmdResult missing = run(bin + " exact --mode maxmin --k 2 --delta 1 --strings " +
                                (dir / "absent.txt").string());
        check(missing.exit_code == 2, "missing input file exits 2");
        CmdResult no_input = run(bin + " exact --mode maxmin --k 2 --delta 1");
        check(no_input.exit_code == 2, "missing --dag/--strings exits 2");
        CmdResult too_many = run(bin + " lcs-dag --strings " + six.string() + " --out " +
                                 (dir / "never.dag").string());
        check(too_many.exit_code == 2, "more inputs than --max-m exits 2");

        fs::path big = dir / "big.txt";
        std::ostringstream content;
        content << "alphabet A B\n";
        for (int i = 0; i < 64; ++i) {
            content << ((i & 32) ? "B" : "A") << ((i & 16) ? "B" : "A") << ((i & 8) ? "B" : "A")
                    << ((i & 4) ? "B" : "A") << ((i & 2) ? "B" : "A") << ((i & 1) ? "B" : "A")
                    << "\n";
        }
        write_file(big, content.str());
        CmdResult budget = run("DIVSTR_BUDGET_MS=0 " + bin +
                               " oracle --mode maxsum --k 3 --strings " + big.string());
        check(budget.exit_code == 3, "exhausted oracle budget exits 3");
    }

    std::cout << (g_failures == 0 ? "all cli checks passed" : "cli checks FAILED") << "\n";
    return g_failures == 0 ? 0 : 1;
}
