#include <doctest.h>

#include <sstream>

#include "divstr/io.hpp"
#include "test_util.hpp"

using namespace divstr;

TEST_CASE("string set files") {
    SUBCASE("separated and concatenated strings, comments, blanks") {
        std::istringstream in(
            "# fixture\n"
            "alphabet A B C\n"
            "\n"
            "ABC   # trailing comment\n"
            "A B A\n");
        StringSet set = read_string_set(in);
        CHECK(set.size() == 2);
        CHECK(set.r() == 3);
        CHECK(set.members()[0].display() == "ABC");
        CHECK(set.members()[1].display() == "ABA");
    }

    SUBCASE("multi-character tokens require separators") {
        std::istringstream in(
            "alphabet a:1 a:2 b:1\n"
            "a:1 b:1\n");
        StringSet set = read_string_set(in);
        CHECK(set.r() == 2);
    }

    SUBCASE("strict reader rejects ragged or duplicate strings") {
        std::istringstream ragged("alphabet A B\nAB\nA\n");
        CHECK_THROWS_AS(read_string_set(ragged), InvalidInputError);
        std::istringstream dup("alphabet A B\nAB\nAB\n");
        CHECK_THROWS_AS(read_string_set(dup), InvalidInputError);
        std::istringstream unknown("alphabet A B\nAX\n");
        CHECK_THROWS_AS(read_string_set(unknown), ParseError);
        std::istringstream headerless("AB\n");
        CHECK_THROWS_AS(read_string_set(headerless), ParseError);
        std::istringstream empty("");
        CHECK_THROWS_AS(read_string_set(empty), ParseError);
    }

    SUBCASE("relaxed reader keeps ragged lists for LCS input") {
        std::istringstream in("alphabet A B\nAB\nA\nAB\n");
        StringList list = read_string_list(in);
        CHECK(list.strings.size() == 3);
    }

    SUBCASE("write then read round-trips") {
        auto alpha = testutil::example_alphabet();
        StringSet set = testutil::example_six(alpha);
        std::ostringstream out;
        write_string_set(out, set, {"note"});
        std::istringstream in(out.str());
        StringSet again = read_string_set(in);
        CHECK(again.members() == set.members());
    }
}

TEST_CASE("dag files") {
    SUBCASE("parse, validate, round-trip") {
        std::istringstream in(
            "dag 2\n"
            "alphabet A B\n"
            "vertex s\n"
            "vertex m\n"
            "vertex t\n"
            "source s\n"
            "sink t\n"
            "edge s A m\n"
            "edge m B t\n"
            "edge s B m\n");
        StringDag dag = read_dag(in);
        CHECK(dag.r() == 2);
        CHECK(dag.edge_count() == 3);
        CHECK(dag.vertex_name(dag.source()) == "s");

        std::ostringstream out;
        write_dag(out, dag);
        std::istringstream back(out.str());
        StringDag again = read_dag(back);
        CHECK(again.edge_count() == dag.edge_count());
        CHECK(again.r() == dag.r());

        std::ostringstream out2;
        write_dag(out2, again);
        CHECK(out.str() == out2.str());  // writer output is stable
    }

    SUBCASE("non-layered file is rejected by validation") {
        std::istringstream in(
            "dag 2\n"
            "alphabet A\n"
            "vertex s\n"
            "vertex x\n"
            "vertex t\n"
            "edge s A t\n"
            "edge s A x\n"
            "edge x A t\n");
        CHECK_THROWS_AS(read_dag(in), ValidationError);
    }

    SUBCASE("parser errors carry line numbers") {
        std::istringstream unknown_directive("dag 1\nalphabet A\nfrobnicate s\n");
        CHECK_THROWS_WITH_AS(read_dag(unknown_directive),
                             "line 3: unknown directive 'frobnicate'", ParseError);
        std::istringstream undeclared("dag 1\nalphabet A\nedge s A t\n");
        CHECK_THROWS_AS(read_dag(undeclared), ParseError);
        std::istringstream bad_r("dag 0\nalphabet A\n");
        CHECK_THROWS_AS(read_dag(bad_r), ParseError);
        std::istringstream no_header("alphabet A\nvertex s\nvertex t\nedge s A t\n");
        CHECK_THROWS_AS(read_dag(no_header), ParseError);
    }
}

TEST_CASE("instance files") {
    SUBCASE("triple family") {
        std::istringstream in("n 2\n1 1 1\n2 2 2\n");
        ThreeDmInstance inst = read_3dm(in);
        CHECK(inst.n == 2);
        CHECK(inst.triples.size() == 2);

        std::istringstream dup("n 2\n1 1 1\n1 1 1\n");
        CHECK_THROWS_AS(read_3dm(dup), ParseError);
        std::istringstream range("n 2\n1 1 3\n");
        CHECK_THROWS_AS(read_3dm(range), ParseError);
    }

    SUBCASE("graph") {
        std::istringstream in("n 3\n1 2\n3 2\n");
        UGraph g = read_graph(in);
        CHECK(g.n == 3);
        REQUIRE(g.edges.size() == 2);
        CHECK(g.edges[1] == std::pair<unsigned, unsigned>{2, 3});  // normalized

        std::istringstream loop("n 3\n2 2\n");
        CHECK_THROWS_AS(read_graph(loop), ParseError);
        std::istringstream dup("n 3\n1 2\n2 1\n");
        CHECK_THROWS_AS(read_graph(dup), ParseError);
    }
}
