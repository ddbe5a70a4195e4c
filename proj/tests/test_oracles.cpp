#include "doctest.h"
#include "gpr/fa_reduction.hpp"
#include "gpr/oracles.hpp"

using namespace gpr;

namespace {

SearchBudget big_budget() {
    SearchBudget b;
    b.max_nodes = 50'000'000;
    return b;
}

}  // namespace

TEST_CASE("budget exhaustion is reported, not thrown") {
    SearchBudget b;
    b.max_nodes = 10;
    Graph g = complete_graph(4);
    auto r = min_consistent_dfa(reduce_quadratic(g), b);
    CHECK(b.exhausted);
    CHECK_FALSE(r.exact);
    CHECK(r.lower <= r.upper);
    REQUIRE(r.machine.has_value());
    CHECK(static_cast<bool>(is_consistent(*r.machine, reduce_quadratic(g))));
}

TEST_CASE("minimum dfa on tiny sample sets") {
    SampleSet s;
    s.add_positive(BitString::parse(""));
    s.add_negative(BitString::parse("1"));
    SearchBudget b = big_budget();
    auto r = min_consistent_dfa(s, b);
    CHECK(r.exact);
    CHECK(r.lower == 1);  // accepting start; "1" falls off into the dead state
    CHECK(static_cast<bool>(is_consistent(*r.machine, s)));

    SampleSet s2;
    s2.add_positive(BitString::parse("0"));
    s2.add_negative(BitString::parse(""));
    s2.add_negative(BitString::parse("00"));
    SearchBudget bx = big_budget();
    auto rx = min_consistent_dfa(s2, bx);
    CHECK(rx.exact);
    CHECK(rx.lower == 2);  // rejecting start, accepting state, loop back on 0
    CHECK(static_cast<bool>(is_consistent(*rx.machine, s2)));

    SampleSet all_pos;
    all_pos.add_positive(BitString::parse("0"));
    all_pos.add_positive(BitString::parse("11"));
    SearchBudget b2 = big_budget();
    auto r2 = min_consistent_dfa(all_pos, b2);
    CHECK(r2.exact);
    CHECK(r2.lower == 1);
}

TEST_CASE("minimum dfa is bounded by chi on quadratic samples") {
    for (const Graph& g : {complete_graph(2), path_graph(3), complete_graph(3)}) {
        SearchBudget b = big_budget();
        auto r = min_consistent_dfa(reduce_quadratic(g), b);
        REQUIRE(r.exact);
        CHECK(r.lower >= chi_exact(g));
        CHECK(static_cast<bool>(is_consistent(*r.machine, reduce_quadratic(g))));
    }
}

TEST_CASE("minimum nfa finds small machines") {
    SampleSet s;
    s.add_positive(BitString::parse("1"));
    s.add_negative(BitString::parse("0"));
    SearchBudget b = big_budget();
    auto r = min_consistent_nfa(s, b, 2);
    CHECK(r.exact);
    CHECK(r.lower == 1);
    REQUIRE(r.machine.has_value());
    CHECK(static_cast<bool>(is_consistent(*r.machine, s)));
}

TEST_CASE("edp oracle matches alpha on small gadgets") {
    for (const Graph& g : {edgeless_graph(3), path_graph(3), complete_graph(3), cycle_graph(4)}) {
        SwitchingGraph w = build_switching_graph(g);
        SearchBudget b = big_budget();
        auto r = edp_exact(w, b, false);
        REQUIRE(r.exact);
        CHECK(r.lower >= alpha_exact(g));
        CHECK(arc_disjoint(w, r.witness));
        for (const auto& p : r.witness.paths) CHECK(path_valid(w, p));
    }
}

TEST_CASE("orderly edp dominates the plain variant") {
    Graph g = bad_example_graph(6);
    SwitchingGraph w = build_switching_graph(g);
    SearchBudget b1 = big_budget(), b2 = big_budget();
    auto plain = edp_exact(w, b1, false);
    auto orderly = edp_exact(w, b2, true);
    if (plain.exact && orderly.exact) CHECK(orderly.lower >= plain.lower);
    CHECK(orderly.lower >= 2);
    CHECK(check_orderly_feasible(w, orderly.witness));
}

TEST_CASE("cycle packing equals the path packing at the threshold") {
    for (const Graph& g : {path_graph(3), complete_graph(3), cycle_graph(4)}) {
        CycleGadget cg = build_cycle_gadget(g);
        SwitchingGraph w = build_switching_graph(g);
        SearchBudget b1 = big_budget(), b2 = big_budget();
        auto pack = cycle_packing_exact(cg, cg.k_threshold, b1);
        auto edp = edp_exact(w, b2, false);
        REQUIRE(pack.exact);
        REQUIRE(edp.exact);
        CHECK(pack.lower == edp.lower);
        for (const auto& c : pack.witness) {
            CHECK(cycle_valid(cg, c));
            CHECK(cycle_vertex_length(c) == 2 * g.vertex_count() + 2);
        }
    }
}

TEST_CASE("minimum clause count equals chi for small graphs") {
    for (const Graph& g : {edgeless_graph(3), path_graph(3), complete_graph(3), complete_graph(4)}) {
        CnfInstance inst = reduce_cnf(g, 1);
        SearchBudget b = big_budget();
        auto r = min_consistent_cnf(inst, b);
        REQUIRE(r.exact);
        CHECK(r.lower == chi_exact(g));
        REQUIRE(r.formula.has_value());
        CHECK(cnf_consistent(*r.formula, inst.samples));
    }
}

TEST_CASE("cnf oracle with no negatives reports zero") {
    CnfInstance inst;
    inst.n = 2;
    inst.base.var_count = 2;
    inst.samples.add_positive(BitString::parse("11"));
    SearchBudget b = big_budget();
    auto r = min_consistent_cnf(inst, b);
    CHECK(r.exact);
    CHECK(r.lower == 0);
    REQUIRE(r.formula.has_value());
    CHECK(cnf_consistent(*r.formula, inst.samples));
}
