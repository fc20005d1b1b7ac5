// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed gating criteria. Criterion 10 is informational and never gates.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "divstr/color_coding.hpp"
#include "divstr/exact_dp.hpp"
#include "divstr/lcs_dag.hpp"
#include "divstr/local_search.hpp"
#include "divstr/oracle.hpp"
#include "divstr/reductions.hpp"
#include "test_util.hpp"

using namespace divstr;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.str().empty()) detail << "; ";
        detail << why;
    }
};

// C1: the running-example pair yields exactly the six length-5 strings.
Outcome criterion1() {
    Outcome out;
    auto t0 = Clock::now();
    auto alpha = testutil::example_alphabet();
    StringDag dag = build_lcs_dag(
        {testutil::ts(alpha, "ABABCDDEE"), testutil::ts(alpha, "ABCBAEEDD")});
    auto lang = enumerate_language(dag, 100);
    double elapsed = ms_since(t0);
    if (dag.r() != 5) out.fail("r != 5");
    std::vector<std::string> got;
    for (const auto& s : lang.strings) got.push_back(s.display());
    if (got != testutil::example_six_texts()) out.fail("language mismatch");
    if (elapsed >= 1000) out.fail("took " + std::to_string(elapsed) + " ms");
    out.detail << "r=5, 6 strings, " << elapsed << " ms";
    return out;
}

// C2: exact optima on the six strings, cross-checked against the oracle.
Outcome criterion2() {
    Outcome out;
    auto alpha = testutil::example_alphabet();
    StringSet six = testutil::example_six(alpha);
    StringDag dag = dag_from_strings(six);

    struct Fixture {
        DiversityMode mode;
        unsigned k;
        std::uint64_t expect;
    };
    const Fixture fixtures[] = {{DiversityMode::MaxMin, 2, 3},
                                {DiversityMode::MaxMin, 3, 1},
                                {DiversityMode::MaxSum, 3, 7},
                                {DiversityMode::MaxSum, 6, 30}};
    for (const Fixture& f : fixtures) {
        BruteDiverseResult oracle =
            brute_diverse(six, f.k, 0, f.mode, SelectionSemantics::Tuple);
        if (oracle.optimum != DiversityValue::finite(f.expect)) {
            out.fail("oracle disagrees with the pinned optimum");
        }
        auto t0 = Clock::now();
        OptimizeResult got = optimize_diversity(dag, f.mode, f.k);
        double elapsed = ms_since(t0);
        std::ostringstream tag;
        tag << to_string(f.mode) << " k=" << f.k;
        if (got.optimum != DiversityValue::finite(f.expect)) {
            out.fail(tag.str() + " optimum != " + std::to_string(f.expect));
        }
        if (elapsed >= 1000) out.fail(tag.str() + " took " + std::to_string(elapsed) + " ms");
    }
    out.detail << "optima 3/1/7/30 confirmed";
    return out;
}

// C3: solver decisions equal the brute-force tuple oracle everywhere.
Outcome criterion3() {
    Outcome out;
    auto t0 = Clock::now();
    std::mt19937_64 rng(301);
    std::uint64_t checks = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 3, 1 + rng() % 6,
                                                    1 + rng() % 12);
        StringDag dag = dag_from_strings(set);
        for (unsigned k = 1; k <= 3; ++k) {
            for (DiversityMode mode : {DiversityMode::MaxMin, DiversityMode::MaxSum}) {
                std::uint64_t pairs = k * (k - 1) / 2;
                std::uint64_t top =
                    (mode == DiversityMode::MaxMin ? set.r() : set.r() * pairs) + 1;
                for (std::uint64_t delta = 0; delta <= top; ++delta) {
                    bool got = solve_diverse(dag, mode, k, delta).yes;
                    bool expect =
                        brute_diverse(set, k, delta, mode, SelectionSemantics::Tuple).yes;
                    ++checks;
                    if (got != expect) ++mismatches;
                }
            }
        }
    }
    double elapsed = ms_since(t0);
    if (mismatches > 0) out.fail(std::to_string(mismatches) + " mismatches");
    if (elapsed >= 120'000) out.fail("suite exceeded 2 minutes");
    out.detail << checks << " decisions, " << mismatches << " mismatches, " << elapsed << " ms";
    return out;
}

// C4: the approximation value never drops below ceil((1-eps) * OPT).
Outcome criterion4() {
    Outcome out;
    std::mt19937_64 rng(401);
    std::uint64_t violations = 0, checks = 0;
    for (int trial = 0; trial < 100; ++trial) {
        unsigned k = 1 + rng() % 6;
        std::size_t count = k >= 4 ? 3 + rng() % 4 : 3 + rng() % 8;
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 3, 2 + rng() % 4, count);
        StringDag dag = dag_from_strings(set);
        k = std::min<unsigned>(k, static_cast<unsigned>(set.size()));
        BruteDiverseResult opt =
            brute_diverse(set, k, 0, DiversityMode::MaxSum, SelectionSemantics::Set);
        for (double eps : {0.1, 0.3, 0.5, 0.9}) {
            PtasResult got = ptas_maxsum(dag, k, eps, trial);
            std::uint64_t bound = static_cast<std::uint64_t>(
                std::ceil((1.0 - eps) * static_cast<double>(opt.optimum.value())));
            ++checks;
            if (got.value < bound) ++violations;
        }
    }
    if (violations > 0) out.fail(std::to_string(violations) + " violations");
    out.detail << checks << " runs, " << violations << " violations";
    return out;
}

// C5: the farthest-string DP value equals the linear scan.
Outcome criterion5() {
    Outcome out;
    std::mt19937_64 rng(501);
    std::uint64_t mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 3, 1 + rng() % 6,
                                                    1 + rng() % 10);
        StringDag dag = dag_from_strings(set);
        std::vector<TokenString> reference;
        std::size_t nref = rng() % 5;
        for (std::size_t i = 0; i < nref; ++i) {
            reference.push_back(testutil::random_string(rng, set.alphabet(), set.r()));
        }
        FarthestResult got =
            farthest_string(dag, reference, set.r() * std::max<std::size_t>(nref, 1));
        BruteFarthestResult expect = brute_farthest(set, reference);
        if (got.value != expect.value) ++mismatches;
    }
    if (mismatches > 0) out.fail(std::to_string(mismatches) + " mismatches");
    out.detail << "200 cases, " << mismatches << " mismatches";
    return out;
}

// C6: the scaled embedding distance halves to the Hamming distance exactly.
Outcome criterion6() {
    Outcome out;
    std::mt19937_64 rng(601);
    std::uint64_t mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        auto alpha = testutil::letters(2 + rng() % 4);
        std::size_t r = 1 + rng() % 8;
        TokenString x = testutil::random_string(rng, alpha, r);
        TokenString y = testutil::random_string(rng, alpha, r);
        std::uint64_t doubled = l1_distance_doubled(l1_embed(x), l1_embed(y));
        if (doubled % 2 != 0 || doubled / 2 != hamming(x, y)) ++mismatches;
    }
    if (mismatches > 0) out.fail(std::to_string(mismatches) + " mismatches");
    out.detail << "1000 pairs, " << mismatches << " mismatches";
    return out;
}

// C7: color-coding soundness and completeness over mixed instances.
Outcome criterion7() {
    Outcome out;
    std::mt19937_64 rng(701);
    unsigned sat_total = 0, sat_yes = 0, unsat_yes = 0, unverified = 0, runs = 0;
    while (runs < 500) {
        unsigned k = runs % 5 == 4 ? 3 : 2;
        std::size_t r = k == 3 ? 2 : 2 + rng() % 2;
        DiversityMode mode = runs % 3 == 2 ? DiversityMode::MaxSum : DiversityMode::MaxMin;
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 3, r, k + 2 + rng() % 6);
        StringDag dag = dag_from_strings(set);
        OptimizeResult opt = optimize_diversity(dag, mode, k);
        std::uint64_t optimum = opt.optimum.value();
        std::uint32_t reps = default_repetitions(k, set.r());

        // satisfiable at the optimum, unsatisfiable just above it
        for (int phase = 0; phase < 2 && runs < 500; ++phase, ++runs) {
            std::uint64_t delta = phase == 0 ? optimum : optimum + 1;
            SolveResult res = fpt_solve(dag, mode, k, delta, runs, reps);
            if (phase == 0) {
                ++sat_total;
                if (res.yes) ++sat_yes;
            } else if (res.yes) {
                ++unsat_yes;
            }
            if (res.yes) {
                bool verified = mode == DiversityMode::MaxMin
                                    ? min_diversity(res.witness).at_least(delta)
                                    : sum_diversity(res.witness) >= delta;
                if (!verified) ++unverified;
            }
        }
    }
    if (unverified > 0) out.fail(std::to_string(unverified) + " unverified YES answers");
    if (unsat_yes > 0) out.fail(std::to_string(unsat_yes) + " YES on unsatisfiable instances");
    double rate = 100.0 * sat_yes / sat_total;
    if (rate < 99.0) out.fail("completeness " + std::to_string(rate) + "% < 99%");
    out.detail << runs << " runs, " << sat_yes << "/" << sat_total << " satisfiable solved ("
               << rate << "%), " << unsat_yes << " false YES, " << unverified << " unverified";
    return out;
}

// C8: reduced-trie size within the color-count bound.
Outcome criterion8() {
    Outcome out;
    std::mt19937_64 rng(801);
    std::uint64_t violations = 0, checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 3, 1 + rng() % 4,
                                                    1 + rng() % 12);
        StringDag dag = dag_from_strings(set);
        unsigned k = 2 + rng() % 2;
        std::uint64_t colors = k * set.r();
        Coloring c = random_coloring(*set.alphabet(), static_cast<std::uint32_t>(colors), trial);
        ColoredTrie trie = build_colored_trie(dag, c);
        double bound = std::pow(static_cast<double>(colors), static_cast<double>(set.r()));
        ++checks;
        if (static_cast<double>(trie.dag.edge_count()) > bound) ++violations;
    }
    {
        // the running-example fixtures
        auto alpha = testutil::example_alphabet();
        StringDag dag = testutil::example_dag(alpha);
        Coloring coarse{{0, 0, 0, 1, 1}, 2, 0};
        ++checks;
        if (build_colored_trie(dag, coarse).dag.edge_count() > 32) ++violations;
        Coloring identity{{0, 1, 2, 3, 4}, 5, 0};
        ++checks;
        if (build_colored_trie(dag, identity).dag.edge_count() > 3125) ++violations;
    }
    if (violations > 0) out.fail(std::to_string(violations) + " bound violations");
    out.detail << checks << " tries, " << violations << " violations";
    return out;
}

// C9: the hardness constructions decide like their source problems.
Outcome criterion9() {
    Outcome out;
    auto t0 = Clock::now();
    std::mt19937_64 rng(901);

    // (a) random triple families
    std::uint64_t mismatch_3dm = 0;
    for (int trial = 0; trial < 50; ++trial) {
        unsigned n = 1 + rng() % 4;
        std::set<std::array<unsigned, 3>> fam;
        std::size_t want = 1 + rng() % 10;
        for (std::size_t i = 0; i < want; ++i) {
            fam.insert({1 + static_cast<unsigned>(rng() % n),
                        1 + static_cast<unsigned>(rng() % n),
                        1 + static_cast<unsigned>(rng() % n)});
        }
        ThreeDmInstance inst{n, {fam.begin(), fam.end()}};
        DiverseInstance reduced = reduce_3dm(inst);
        StringDag dag = dag_from_strings(reduced.strings);
        if (solve_maxmin(dag, reduced.k, reduced.delta_min).yes != brute_matching_3dm(inst)) {
            ++mismatch_3dm;
        }
    }
    if (mismatch_3dm > 0) out.fail("(a) " + std::to_string(mismatch_3dm) + " 3DM mismatches");

    // (b) every graph on up to five vertices, every clique size
    std::uint64_t mismatch_clique = 0, clique_checks = 0;
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<std::pair<unsigned, unsigned>> all_pairs;
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned j = i + 1; j <= n; ++j) all_pairs.emplace_back(i, j);
        }
        for (std::uint64_t mask = 0; mask < (1ull << all_pairs.size()); ++mask) {
            UGraph g{n, {}};
            for (std::size_t b = 0; b < all_pairs.size(); ++b) {
                if (mask >> b & 1) g.edges.push_back(all_pairs[b]);
            }
            for (unsigned k = 1; k <= n; ++k) {
                CliqueReduction red = reduce_clique(g, k);
                StringDag dag = dag_from_strings(red.strings);
                ++clique_checks;
                if (solve_maxmin(dag, red.k, red.delta).yes != brute_clique(g, k)) {
                    ++mismatch_clique;
                }
            }
        }
    }
    if (mismatch_clique > 0) {
        out.fail("(b) " + std::to_string(mismatch_clique) + " clique mismatches");
    }

    // (c) two-string encodings of 50 random sets: language equality,
    // distance shift, and decision equality at the shifted threshold
    std::uint64_t lang_bad = 0, shift_bad = 0, endtoend_bad = 0;
    int made = 0;
    std::string first_counterexample;
    while (made < 50) {
        unsigned s_want = 2 + rng() % 3;
        std::size_t r = 1 + rng() % 3;
        StringSet set = testutil::random_string_set(rng, 2 + rng() % 2, r, s_want);
        if (set.size() < 2) continue;
        ++made;
        unsigned s = static_cast<unsigned>(set.size());
        unsigned k = 1 + rng() % s;

        LcsEncoding probe = encode_as_lcs(set, k, 0, DiversityMode::MaxMin);
        std::vector<TokenString> expect = probe.padded;
        std::sort(expect.begin(), expect.end());
        std::vector<TokenString> actual = probe.s1.length() <= 20
                                              ? brute_lcs_set(probe.s1, probe.s2)
                                              : lcs_set_memo(probe.s1, probe.s2);
        if (actual != expect) {
            ++lang_bad;
            if (first_counterexample.empty()) {
                std::ostringstream ex;
                ex << "{";
                for (const auto& m : set.members()) ex << " " << m.display();
                ex << " }: " << actual.size() << " LCSs of length " << actual[0].length()
                   << " vs " << expect.size() << " padded copies of length "
                   << expect[0].length();
                first_counterexample = ex.str();
            }
        }
        for (unsigned i = 0; i < s; ++i) {
            for (unsigned j = i + 1; j < s; ++j) {
                if (hamming(probe.padded[i], probe.padded[j]) !=
                    hamming(set.members()[i], set.members()[j]) + 2 * s) {
                    ++shift_bad;
                }
            }
        }
        StringDag direct = dag_from_strings(set);
        StringDag encoded = build_lcs_dag({probe.s1, probe.s2});
        for (DiversityMode mode : {DiversityMode::MaxMin, DiversityMode::MaxSum}) {
            std::uint64_t pairs = k * (k - 1) / 2;
            std::uint64_t top = mode == DiversityMode::MaxMin ? r : r * pairs;
            for (std::uint64_t delta = 0; delta <= top + 1; ++delta) {
                LcsEncoding enc = encode_as_lcs(set, k, delta, mode);
                bool plain = solve_diverse(direct, mode, k, delta).yes;
                bool shifted = solve_diverse(encoded, mode, k, enc.delta_shifted).yes;
                if (plain != shifted) ++endtoend_bad;
            }
        }
    }
    if (shift_bad > 0) out.fail("(c) " + std::to_string(shift_bad) + " distance-shift mismatches");
    if (lang_bad > 0) {
        out.fail("(c) " + std::to_string(lang_bad) +
                 "/50 encodings have longest common subsequences beyond the padded copies"
                 " (known construction gap; first: " + first_counterexample + ")");
    }
    if (endtoend_bad > 0) {
        out.fail("(c) " + std::to_string(endtoend_bad) + " end-to-end decision mismatches");
    }

    double elapsed = ms_since(t0);
    if (elapsed >= 180'000) out.fail("suite exceeded 3 minutes");
    if (!out.detail.str().empty()) out.detail << "; ";
    out.detail << "3dm 50 ok=" << (50 - mismatch_3dm) << ", clique " << clique_checks
               << " ok=" << (clique_checks - mismatch_clique) << ", encoding lang_bad=" << lang_bad
               << " shift_bad=" << shift_bad << " endtoend_bad=" << endtoend_bad << ", "
               << elapsed << " ms";
    return out;
}

// C10: informational scaling log for the exact solver.
Outcome criterion10() {
    Outcome out;
    std::mt19937_64 rng(1001);
    out.detail << "size(G) vs time:";
    double prev = 0;
    for (std::size_t count : {4, 8, 16, 32}) {
        StringSet set = testutil::random_string_set(rng, 4, 6, count);
        StringDag dag = dag_from_strings(set);
        auto t0 = Clock::now();
        solve_maxmin(dag, 2, 2);
        double elapsed = ms_since(t0);
        out.detail << " [" << dag.edge_count() << "e " << elapsed << "ms";
        if (prev > 0) out.detail << " x" << (elapsed / prev);
        out.detail << "]";
        prev = elapsed;
    }
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
        bool informational;
    };
    const Entry entries[] = {
        {"C1 running-example LCS DAG fixture", criterion1, false},
        {"C2 exact-solver optima fixtures", criterion2, false},
        {"C3 oracle equivalence for the exact solvers", criterion3, false},
        {"C4 approximation guarantee", criterion4, false},
        {"C5 farthest-string equivalence", criterion5, false},
        {"C6 embedding isometry", criterion6, false},
        {"C7 color-coding soundness and completeness", criterion7, false},
        {"C8 reduced-trie size bound", criterion8, false},
        {"C9 reduction equivalences", criterion9, false},
        {"C10 solver scaling (informational)", criterion10, true},
    };

    int failures = 0;
    for (const Entry& e : entries) {
        Outcome out = e.run();
        bool pass = out.pass || e.informational;
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << e.name;
        std::string detail = out.detail.str();
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
        std::cout.flush();
    }
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
    } else {
        std::cout << "all criteria passed\n";
    }
    return failures;
}
