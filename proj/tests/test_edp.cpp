#include <set>

#include "doctest.h"
#include "gpr/edp.hpp"
#include "gpr/graph.hpp"

using namespace gpr;

TEST_CASE("switching graph geometry for C4") {
    Graph g = cycle_graph(4);
    SwitchingGraph w = build_switching_graph(g);
    CHECK(w.n == 4);
    CHECK(w.split_count() == 4);
    CHECK(w.uncrossed_count() == 2);
    // sources, sinks, corners, split pairs; plain uncrossings add no nodes.
    CHECK(w.nodes.size() == 4u + 4u + 4u + 2u * 4u);
    for (const auto& arc : w.arcs) {
        const auto& from = w.nodes[static_cast<size_t>(arc.from)];
        const auto& to = w.nodes[static_cast<size_t>(arc.to)];
        bool right = to.x > from.x && to.y == from.y;
        bool down = to.x == from.x && to.y < from.y;
        bool internal = to.x == from.x && to.y == from.y;
        CHECK((right || down || internal));
    }
}

TEST_CASE("canonical paths and witnesses") {
    Graph g = cycle_graph(4);
    SwitchingGraph w = build_switching_graph(g);
    for (int i = 1; i <= 4; ++i) {
        Path p = canonical_path(w, i);
        CHECK(path_valid(w, p));
        CHECK(path_source_line(w, p) == i);
        CHECK(path_sink_line(w, p) == i);
    }
    PathSet ps = canonical_witness(w, max_independent_set(g));
    CHECK(ps.paths.size() == 2);
    CHECK(arc_disjoint(w, ps));
    CHECK(check_orderly_feasible(w, ps));
    CHECK_THROWS(canonical_witness(w, {1, 2}));  // not independent
}

TEST_CASE("box classification follows the peel order") {
    Graph g = path_graph(2);
    Graph h = path_graph(2);
    SwitchingGraph w = build_switching_graph_product(g, h);
    auto boxes = classify_boxes(w);
    REQUIRE(boxes.size() == 1);
    CHECK(boxes[0].i == 2);
    CHECK(boxes[0].j == 1);
    CHECK_FALSE(boxes[0].switching);  // 12 is an edge of g

    SwitchingGraph we = build_switching_graph_product(edgeless_graph(3), edgeless_graph(1));
    auto boxes3 = classify_boxes(we);
    REQUIRE(boxes3.size() == 3);
    CHECK(boxes3[0].i == 3);
    CHECK(boxes3[0].j == 2);
    CHECK(boxes3[1].i == 3);
    CHECK(boxes3[1].j == 1);
    CHECK(boxes3[2].i == 2);
    CHECK(boxes3[2].j == 1);
    CHECK(boxes3[0].switching);
}

TEST_CASE("reversal trace on the two-line edgeless gadget") {
    Graph g = edgeless_graph(2);
    SwitchingGraph w = build_switching_graph_product(g, edgeless_graph(1));
    PathSet ps;
    ps.paths.push_back(canonical_path(w, 1));
    ps.paths.push_back(canonical_path(w, 2));
    ReversalTrace t = reversal_trace(w, ps);
    REQUIRE(t.configurations.size() == 2);  // one switching box
    CHECK(t.configurations.front() == std::vector<int>{2, 1});
    CHECK(t.configurations.back() == std::vector<int>{1, 2});
    CHECK(t.reversals.front() == 1);
    CHECK(t.reversals.back() == 0);
    CHECK(t.max_drop == 1);
}

TEST_CASE("semi-canonical paths can be skipped") {
    Graph g = edgeless_graph(2);
    Graph h = edgeless_graph(2);
    SwitchingGraph w = build_switching_graph_product(g, h);
    PathSet ps;
    for (int i = 1; i <= 4; ++i) ps.paths.push_back(canonical_path(w, i));
    ReversalTrace all = reversal_trace(w, ps, false);
    CHECK(all.traced == 4);
    ReversalTrace none = reversal_trace(w, ps, true);
    CHECK(none.traced == 0);  // canonical paths stay in their own region
}

TEST_CASE("bad example family separates alpha from the path count") {
    for (int n : {6, 9}) {
        Graph g = bad_example_graph(n);
        CHECK(alpha_exact(g) == 2);
        SwitchingGraph w = build_switching_graph(g);
        auto ps = bad_example_witness(w);
        REQUIRE(ps.has_value());
        CHECK(static_cast<int>(ps->paths.size()) == n / 3);
        CHECK(arc_disjoint(w, *ps));
        std::set<int> sinks;
        for (const auto& p : ps->paths) {
            CHECK(path_valid(w, p));
            CHECK(path_source_line(w, p) == path_sink_line(w, p));
            sinks.insert(path_sink_line(w, p));
        }
        CHECK(sinks.size() == ps->paths.size());
    }
    CHECK_THROWS(bad_example_graph(5));
}

TEST_CASE("cycle gadget lengths") {
    Graph g = path_graph(3);
    CycleGadget cg = build_cycle_gadget(g);
    const int n = 3;
    CHECK(cg.k_threshold == 2 * n + 2);
    CHECK(cg.w.buffered);
    for (int i = 1; i <= n; ++i) {
        Cycle c;
        c.arcs = canonical_path(cg.w, i).arcs;
        c.arcs.push_back(cg.back_arcs[static_cast<size_t>(i)]);
        CHECK(cycle_valid(cg, c));
        CHECK(cycle_vertex_length(c) == 2 * n + 2);
        CHECK(cycle_back_arc_count(cg, c) == 1);
    }
    Cycle broken;
    broken.arcs = canonical_path(cg.w, 1).arcs;  // not closed
    CHECK_FALSE(cycle_valid(cg, broken));
}
