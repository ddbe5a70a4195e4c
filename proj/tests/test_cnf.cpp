#include <sstream>

#include "doctest.h"
#include "gpr/cnf.hpp"
#include "gpr/graph.hpp"

using namespace gpr;

TEST_CASE("reduction sample shapes") {
    Graph g = path_graph(3);
    CnfInstance inst = reduce_cnf(g, 1);
    CHECK(inst.base.var_count == 3);
    CHECK(inst.samples.positives().size() == 2);  // one per edge
    CHECK(inst.samples.negatives().size() == 3);  // one per vertex

    CnfInstance inst2 = reduce_cnf(g, 2);
    CHECK(inst2.base.var_count == 6);
    CHECK(inst2.samples.positives().size() == 4);
    CHECK(inst2.samples.negatives().size() == 9);
}

TEST_CASE("coloring construction is consistent and compact") {
    for (const Graph& g : {path_graph(3), complete_graph(3), cycle_graph(4)}) {
        int chi = chi_exact(g);
        for (int k = 1; k <= 2; ++k) {
            CnfFormula f = build_cnf_from_coloring(g, k, optimal_coloring(g));
            CHECK(cnf_consistent(f, reduce_cnf(g, k).samples));
            int bound = 1;
            for (int i = 0; i < k; ++i) bound *= chi;
            CHECK(f.clause_count() <= bound);
        }
    }
    CHECK_THROWS(build_cnf_from_coloring(complete_graph(2), 1, {1, 1}));
}

TEST_CASE("edgeless graph needs a single empty clause") {
    Graph g = edgeless_graph(3);
    CnfFormula f = build_cnf_from_coloring(g, 1, optimal_coloring(g));
    REQUIRE(f.clause_count() == 1);
    CHECK(f.clauses[0].empty());
    CHECK(cnf_consistent(f, reduce_cnf(g, 1).samples));
}

TEST_CASE("extraction recovers a proper coloring") {
    for (const Graph& g : {path_graph(4), cycle_graph(4), complete_graph(4)}) {
        CnfFormula f = build_cnf_from_coloring(g, 1, optimal_coloring(g));
        auto coloring = extract_coloring_from_cnf(g, f);
        CHECK(is_proper_coloring(g, coloring));
        CHECK(color_count(coloring) <= f.clause_count());
    }
    // An inconsistent formula is rejected.
    CnfFormula empty;
    empty.var_count = 2;
    CHECK_THROWS(extract_coloring_from_cnf(complete_graph(2), empty));
}

TEST_CASE("dimacs round trip") {
    CnfFormula f;
    f.var_count = 3;
    f.clauses = {{1, 3}, {}, {2}};
    std::stringstream ss;
    write_dimacs(ss, f);
    CnfFormula back = read_dimacs(ss);
    CHECK(back.var_count == 3);
    CHECK(back.clauses == f.clauses);
}
