#include <sstream>

#include "doctest.h"
#include "gpr/graph.hpp"

using namespace gpr;

TEST_CASE("basic graph invariants") {
    Graph g = cycle_graph(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(5, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK_THROWS(g.has_edge(0, 1));
}

TEST_CASE("graph io round trip") {
    Graph g = path_graph(4);
    std::stringstream ss;
    write_graph(ss, g);
    CHECK(read_graph(ss) == g);
}

TEST_CASE("lex product index layout and edge rule") {
    Graph g = complete_graph(2);
    Graph h = edgeless_graph(3);
    Graph gh = lex_product(g, h);
    CHECK(gh.vertex_count() == 6);
    // (1,a)-(2,b) always, (u,a)-(u,b) never.
    CHECK(gh.has_edge(1, 4));
    CHECK(gh.has_edge(3, 6));
    CHECK_FALSE(gh.has_edge(1, 2));
    CHECK(gh.edge_count() == 9);
    CHECK(k_fold_power(g, 1) == g);
    CHECK(k_fold_power(g, 2).vertex_count() == 4);
}

TEST_CASE("alpha and chi on known graphs") {
    CHECK(alpha_exact(complete_graph(4)) == 1);
    CHECK(alpha_exact(cycle_graph(5)) == 2);
    CHECK(alpha_exact(edgeless_graph(6)) == 6);
    CHECK(chi_exact(complete_graph(4)) == 4);
    CHECK(chi_exact(cycle_graph(5)) == 3);
    CHECK(chi_exact(cycle_graph(6)) == 2);
    CHECK(chi_exact(edgeless_graph(6)) == 1);

    Graph g = cycle_graph(5);
    auto iset = max_independent_set(g);
    CHECK(iset.size() == 2);
    CHECK_FALSE(g.has_edge(iset[0], iset[1]));
    auto coloring = optimal_coloring(g);
    CHECK(is_proper_coloring(g, coloring));
    CHECK(color_count(coloring) == 3);
}

TEST_CASE("alpha is multiplicative and chi submultiplicative on products") {
    Graph g = cycle_graph(5);
    Graph h = complete_graph(2);
    auto r = verify_product_identities(g, h);
    CHECK(r.ok());
    CHECK(r.alpha_gh == r.alpha_g * r.alpha_h);
    CHECK(r.chi_gh <= r.chi_g * r.chi_h);
}

TEST_CASE("nonisomorphic enumeration counts") {
    CHECK(nonisomorphic_graphs(1).size() == 1);
    CHECK(nonisomorphic_graphs(2).size() == 2);
    CHECK(nonisomorphic_graphs(3).size() == 4);
    CHECK(nonisomorphic_graphs(4).size() == 11);
    CHECK(nonisomorphic_graphs(5).size() == 34);
    CHECK(nonisomorphic_graphs_up_to(4).size() == 18);
}

TEST_CASE("random graphs are deterministic per seed") {
    std::mt19937_64 a(7), b(7);
    CHECK(random_graph(6, 0.5, a) == random_graph(6, 0.5, b));
}
