// divstr: diverse string selection over explicit sets and string DAGs.
//
// Exit codes: 0 = YES/success, 1 = NO, 2 = usage or input error,
// 3 = budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divstr/color_coding.hpp"
#include "divstr/exact_dp.hpp"
#include "divstr/io.hpp"
#include "divstr/lcs_dag.hpp"
#include "divstr/local_search.hpp"
#include "divstr/oracle.hpp"
#include "divstr/reductions.hpp"

namespace {

using namespace divstr;
using Clock = std::chrono::steady_clock;

struct CommonOpts {
    std::string format = "text";
    bool no_timing = false;
};

struct RunReport {
    std::string command;
    std::optional<std::string> decision;
    std::optional<std::string> value;
    std::optional<std::string> value_label;  // ACHIEVED or VALUE
    std::vector<std::string> witness;
    std::optional<SolveStats> stats;
    std::optional<double> time_ms;
};

void emit_report(std::ostream& out, const RunReport& report, const CommonOpts& opts) {
    if (opts.format == "json") {
        nlohmann::json j;
        j["command"] = report.command;
        j["decision"] = report.decision ? nlohmann::json(*report.decision) : nlohmann::json();
        j["value"] = report.value ? nlohmann::json(*report.value) : nlohmann::json();
        j["witness"] = report.witness;
        if (report.stats) {
            j["stats"] = {{"states", report.stats->states},
                          {"transitions", report.stats->transitions},
                          {"repetitions", report.stats->repetitions}};
        }
        if (report.time_ms && !opts.no_timing) j["time_ms"] = *report.time_ms;
        out << j.dump() << "\n";
        return;
    }
    if (report.decision) out << "DECISION " << *report.decision << "\n";
    if (report.value) {
        out << (report.value_label ? *report.value_label : "ACHIEVED") << ' ' << *report.value << "\n";
    }
    for (const std::string& w : report.witness) out << w << "\n";
    if (report.stats) {
        out << "stats states=" << report.stats->states << " transitions=" << report.stats->transitions
            << " reps=" << report.stats->repetitions << "\n";
    }
    out << "# command: " << report.command << "\n";
    if (report.time_ms && !opts.no_timing) out << "# time_ms: " << *report.time_ms << "\n";
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* ms = std::getenv("DIVSTR_BUDGET_MS")) {
        budget.time_ceiling = std::chrono::milliseconds(std::strtoll(ms, nullptr, 10));
    }
    return budget;
}

struct DagInput {
    std::string dag_file;
    std::string strings_file;

    void attach(CLI::App* cmd) {
        auto* d = cmd->add_option("--dag", dag_file, "string DAG file");
        auto* s = cmd->add_option("--strings", strings_file, "string set file (routed through the trie builder)");
        d->excludes(s);
    }

    StringDag load() const {
        if (!dag_file.empty()) return read_dag_file(dag_file);
        if (!strings_file.empty()) return dag_from_strings(read_string_set_file(strings_file));
        throw InvalidInputError("one of --dag or --strings is required");
    }
};

DiversityMode parse_mode(const std::string& mode) {
    if (mode == "maxmin") return DiversityMode::MaxMin;
    if (mode == "maxsum") return DiversityMode::MaxSum;
    throw InvalidInputError("mode must be maxmin or maxsum");
}

std::vector<std::string> display_all(const std::vector<TokenString>& strings) {
    std::vector<std::string> out;
    out.reserve(strings.size());
    for (const TokenString& s : strings) out.push_back(s.display());
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"diverse string selection on string sets and string DAGs"};
    app.require_subcommand(1);
    const std::string command_echo = join_args(argc, argv);

    CommonOpts common;
    int exit_code = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", common.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_flag("--no-timing", common.no_timing, "suppress wall-time output");
    };

    // ---- exact ----
    auto* exact = app.add_subcommand("exact", "exact layered DP decision for bounded K");
    std::string mode_str = "maxmin";
    unsigned k = 1;
    std::uint64_t delta = 0;
    bool want_witness = false;
    bool optimize = false;
    DagInput exact_in;
    exact->add_option("--mode", mode_str, "maxmin or maxsum")->required();
    exact->add_option("--k", k, "number of strings to select")->required();
    exact->add_option("--delta", delta, "diversity threshold (default 0)");
    exact->add_flag("--witness", want_witness, "print the selected strings");
    exact->add_flag("--optimize", optimize, "binary-search the largest feasible threshold");
    exact_in.attach(exact);
    add_common(exact);
    exact->callback([&] {
        auto t0 = Clock::now();
        StringDag dag = exact_in.load();
        RunReport report;
        report.command = command_echo;
        DiversityMode mode = parse_mode(mode_str);
        if (optimize) {
            OptimizeResult opt = optimize_diversity(dag, mode, k);
            report.decision = "YES";
            report.value = opt.optimum.display();
            if (want_witness) report.witness = display_all(opt.witness);
            report.stats = opt.stats;
            exit_code = 0;
        } else {
            SolveResult res = solve_diverse(dag, mode, k, delta);
            report.decision = res.yes ? "YES" : "NO";
            if (res.achieved) report.value = res.achieved->display();
            if (want_witness && res.yes) report.witness = display_all(res.witness);
            report.stats = res.stats;
            exit_code = res.yes ? 0 : 1;
        }
        report.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        emit_report(std::cout, report, common);
    });

    // ---- ptas ----
    auto* ptas = app.add_subcommand("ptas", "(1-eps)-approximate largest-sum selection");
    double eps = 0.5;
    std::uint64_t seed = 0;
    DagInput ptas_in;
    ptas->add_option("--k", k, "number of strings to select")->required();
    ptas->add_option("--eps", eps, "approximation parameter in (0,1)")->required();
    ptas->add_option("--seed", seed, "seed for the local-search start (default 0)");
    ptas_in.attach(ptas);
    add_common(ptas);
    ptas->callback([&] {
        auto t0 = Clock::now();
        StringDag dag = ptas_in.load();
        PtasResult res = ptas_maxsum(dag, k, eps, seed);
        RunReport report;
        report.command = command_echo;
        report.value_label = "VALUE";
        report.value = std::to_string(res.value);
        report.witness = display_all(res.strings);
        report.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        emit_report(std::cout, report, common);
        exit_code = 0;
    });

    // ---- fpt ----
    auto* fpt = app.add_subcommand("fpt", "randomized color-coding solver for parameters (K, r)");
    std::uint32_t reps = 0;
    std::uint32_t max_reps = 100'000;
    unsigned threads = 1;
    DagInput fpt_in;
    fpt->add_option("--mode", mode_str, "maxmin or maxsum")->required();
    fpt->add_option("--k", k, "number of strings to select")->required();
    fpt->add_option("--delta", delta, "diversity threshold (default 0)");
    fpt->add_option("--seed", seed, "base seed (default 0)");
    fpt->add_option("--reps", reps, "repetitions (default: ceil(ln(100)/p))");
    fpt->add_option("--max-reps", max_reps, "cap for the default repetition count");
    fpt->add_option("--threads", threads, "parallel repetitions per wave (default 1)");
    fpt->add_flag("--witness", want_witness, "print the selected strings");
    fpt_in.attach(fpt);
    add_common(fpt);
    fpt->callback([&] {
        auto t0 = Clock::now();
        StringDag dag = fpt_in.load();
        std::uint32_t repetitions = reps > 0 ? reps : default_repetitions(k, dag.r(), max_reps);
        SolveResult res = fpt_solve(dag, parse_mode(mode_str), k, delta, seed, repetitions, threads);
        RunReport report;
        report.command = command_echo;
        report.decision = res.yes ? "YES" : "NO";
        if (res.achieved) report.value = res.achieved->display();
        if (want_witness && res.yes) report.witness = display_all(res.witness);
        report.stats = res.stats;
        report.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        emit_report(std::cout, report, common);
        exit_code = res.yes ? 0 : 1;
    });

    // ---- lcs-dag ----
    auto* lcs = app.add_subcommand("lcs-dag", "build the DAG of all longest common subsequences");
    std::string in_file, out_file;
    unsigned max_m = 4;
    lcs->add_option("--strings", in_file, "input string list (lengths may differ)")->required();
    lcs->add_option("--out", out_file, "output DAG file")->required();
    lcs->add_option("--max-m", max_m, "largest accepted number of input strings (default 4)");
    lcs->callback([&] {
        StringList list = read_string_list_file(in_file);
        if (list.strings.size() > max_m) {
            throw InvalidInputError("more than " + std::to_string(max_m) +
                                    " input strings (raise --max-m to override)");
        }
        StringDag dag = build_lcs_dag(list.strings);
        std::ofstream out(out_file);
        if (!out) throw InvalidInputError("cannot write file: " + out_file);
        write_dag(out, dag, {"all longest common subsequences"});
        std::cout << "LCS_LENGTH " << dag.r() << "\n"
                  << "SIZE " << dag.edge_count() << "\n";
        exit_code = 0;
    });

    // ---- enumerate ----
    auto* enumerate = app.add_subcommand("enumerate", "spell out the represented language");
    std::uint64_t limit = 1'000'000;
    DagInput enum_in;
    enumerate->add_option("--limit", limit, "largest number of strings to print (default 10^6)");
    enum_in.attach(enumerate);
    enumerate->callback([&] {
        StringDag dag = enum_in.load();
        LanguageSample sample = enumerate_language(dag, limit);
        for (const TokenString& s : sample.strings) std::cout << s.display() << "\n";
        if (sample.truncated) std::cout << "# truncated at " << limit << "\n";
        exit_code = 0;
    });

    // ---- validate ----
    auto* validate_cmd = app.add_subcommand("validate", "check DAG structure and report depths");
    std::string dag_file;
    bool show_depths = false;
    validate_cmd->add_option("--dag", dag_file, "string DAG file")->required();
    validate_cmd->add_flag("--depths", show_depths, "print one depth line per vertex");
    validate_cmd->callback([&] {
        StringDag dag = read_dag_file(dag_file);
        std::cout << "VALID r=" << dag.r() << " vertices=" << dag.vertex_count()
                  << " edges=" << dag.edge_count() << "\n";
        std::cout << "layers";
        for (const auto& layer : dag.layers()) std::cout << ' ' << layer.size();
        std::cout << "\n";
        if (show_depths) {
            for (VertexId v = 0; v < dag.vertex_count(); ++v) {
                std::cout << "depth " << dag.vertex_name(v) << ' ' << dag.depth(v) << "\n";
            }
        }
        exit_code = 0;
    });

    // ---- reduce ----
    auto* reduce = app.add_subcommand("reduce", "hardness constructions as instance transformations");
    reduce->require_subcommand(1);
    std::string red_in, red_out;

    auto* r3dm = reduce->add_subcommand("3dm", "triple family to a diverse 3-string instance");
    r3dm->add_option("--in", red_in, "3DM instance file")->required();
    r3dm->add_option("--out", red_out, "output string set file")->required();
    r3dm->callback([&] {
        ThreeDmInstance inst = read_3dm_file(red_in);
        DiverseInstance out = reduce_3dm(inst);
        std::ofstream f(red_out);
        if (!f) throw InvalidInputError("cannot write file: " + red_out);
        write_string_set(f, out.strings,
                         {"3DM reduction", "K " + std::to_string(out.k),
                          "DELTA_MIN " + std::to_string(out.delta_min),
                          "DELTA_SUM " + std::to_string(out.delta_sum)});
        std::cout << "K " << out.k << "\n"
                  << "DELTA_MIN " << out.delta_min << "\n"
                  << "DELTA_SUM " << out.delta_sum << "\n";
        exit_code = 0;
    });

    auto* rclique = reduce->add_subcommand("clique", "graph to a diverse string instance");
    rclique->add_option("--in", red_in, "graph file")->required();
    rclique->add_option("--out", red_out, "output string set file")->required();
    rclique->add_option("--k", k, "clique size")->required();
    rclique->callback([&] {
        UGraph g = read_graph_file(red_in);
        CliqueReduction out = reduce_clique(g, k);
        std::ofstream f(red_out);
        if (!f) throw InvalidInputError("cannot write file: " + red_out);
        write_string_set(f, out.strings,
                         {"clique reduction", "K " + std::to_string(out.k),
                          "DELTA " + std::to_string(out.delta)});
        std::cout << "K " << out.k << "\n"
                  << "DELTA " << out.delta << "\n";
        exit_code = 0;
    });

    auto* rlcs = reduce->add_subcommand("lcs-encode", "string set to a two-string LCS instance");
    rlcs->add_option("--in", red_in, "string set file")->required();
    rlcs->add_option("--out", red_out, "output two-string file")->required();
    rlcs->add_option("--k", k, "number of strings to select")->required();
    rlcs->add_option("--delta", delta, "original threshold")->required();
    rlcs->add_option("--mode", mode_str, "maxmin or maxsum")->required();
    rlcs->callback([&] {
        StringSet set = read_string_set_file(red_in);
        LcsEncoding enc = encode_as_lcs(set, k, delta, parse_mode(mode_str));
        std::ofstream f(red_out);
        if (!f) throw InvalidInputError("cannot write file: " + red_out);
        StringSet pair(enc.s1.alphabet(), {enc.s1, enc.s2});
        write_string_set(f, pair,
                         {"LCS encoding", "DELTA_SHIFTED " + std::to_string(enc.delta_shifted)});
        std::cout << "DELTA_SHIFTED " << enc.delta_shifted << "\n";
        exit_code = 0;
    });

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "brute-force reference decisions for fixtures");
    std::string semantics_str = "tuple";
    std::string oracle_strings;
    oracle->add_option("--mode", mode_str, "maxmin or maxsum")->required();
    oracle->add_option("--k", k, "number of strings to select")->required();
    oracle->add_option("--delta", delta, "diversity threshold (default 0)");
    oracle->add_option("--strings", oracle_strings, "string set file")->required();
    oracle->add_option("--semantics", semantics_str, "tuple (multisets) or set")
        ->check(CLI::IsMember({"tuple", "set"}));
    oracle->add_flag("--witness", want_witness, "print the best selection");
    add_common(oracle);
    oracle->callback([&] {
        auto t0 = Clock::now();
        StringSet set = read_string_set_file(oracle_strings);
        SelectionSemantics semantics =
            semantics_str == "tuple" ? SelectionSemantics::Tuple : SelectionSemantics::Set;
        BruteDiverseResult res =
            brute_diverse(set, k, delta, parse_mode(mode_str), semantics, budget_from_env());
        RunReport report;
        report.command = command_echo;
        report.decision = res.yes ? "YES" : "NO";
        report.value = res.optimum.display();
        if (want_witness) report.witness = display_all(res.witness);
        report.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        emit_report(std::cout, report, common);
        exit_code = res.yes ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const divstr::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const divstr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
