#include "doctest.h"
#include "gpr/fa_reduction.hpp"
#include "gpr/graph.hpp"

using namespace gpr;

TEST_CASE("encoding context pads to powers of two") {
    EncodingContext ctx = EncodingContext::for_count(5);
    CHECK(ctx.k_bits == 3);
    CHECK(ctx.padded_n == 8);
    CHECK(ctx.encode(1).to_string() == "000");
    CHECK(ctx.encode(6).to_string() == "101");
    CHECK(ctx.encode_reversed(6).to_string() == "101");
    CHECK(ctx.encode_reversed(2).to_string() == "100");
    CHECK(ctx.decode(ctx.encode(7), 0) == 7);
}

TEST_CASE("quadratic reduction shape") {
    Graph g = path_graph(3);
    EncodingContext ctx = EncodingContext::for_graph(g);
    SampleSet s = reduce_quadratic(g);
    CHECK(s.positives().size() == static_cast<size_t>(ctx.padded_n));
    CHECK(s.negatives().size() == 2 * static_cast<size_t>(g.edge_count()));
    for (const auto& b : s.positives()) CHECK(b.size() == 2 * ctx.k_bits + 1);
    // enc(u) 1 rev(enc(u)) for u=2 over 2 bits: 01 1 10.
    CHECK(s.contains_positive(BitString::parse("01110")));
    // edge 1-2 gives enc(1) 1 rev(enc(2)) and enc(2) 1 rev(enc(1)).
    CHECK(s.contains_negative(BitString::parse("00110")));
    CHECK(s.contains_negative(BitString::parse("01100")));
    CHECK_THROWS(reduce_quadratic(edgeless_graph(1)));
}

TEST_CASE("tight reduction sample counts") {
    Graph g = path_graph(3);
    EncodingContext ctx = EncodingContext::for_graph(g);
    for (int k = 1; k <= 2; ++k) {
        SampleSet s = reduce_tight(g, k);
        size_t tuples = 1;
        for (int i = 0; i < k; ++i) tuples *= static_cast<size_t>(ctx.padded_n);
        CHECK(s.positives().size() == static_cast<size_t>(k) * tuples);
    }
}

TEST_CASE("base dfa is a layered complete prefix tree") {
    Graph g = path_graph(3);
    LayeredDfa base = build_base_dfa(g);
    EncodingContext ctx = EncodingContext::for_graph(g);
    CHECK(base.dfa.state_count == (1 << (2 * ctx.k_bits + 2)) - 1);
    CHECK(base.layering_holds());
    CHECK(base.depth() == 2 * ctx.k_bits + 1);
    CHECK(static_cast<bool>(is_consistent(base.dfa, reduce_quadratic(g))));
    CHECK(is_acyclic(base.dfa));
}

TEST_CASE("product machine is consistent for a small pair") {
    Graph g = path_graph(3);
    Graph h = complete_graph(2);
    ProductDfaResult pr = build_product_dfa(g, optimal_coloring(g), build_base_dfa(h));
    CHECK(pr.copies == 2);
    CHECK(pr.size <= pr.size_bound);
    CHECK(pr.machine.layering_holds());

    EncodingContext cg = EncodingContext::for_graph(g);
    EncodingContext ch = EncodingContext::for_graph(h);
    Graph target =
        lex_product(pad_with_isolated(g, cg.padded_n), pad_with_isolated(h, ch.padded_n));
    CHECK(static_cast<bool>(is_consistent(pr.machine.dfa, reduce_quadratic(target))));
}

TEST_CASE("tight adfa properties") {
    for (int k = 1; k <= 2; ++k) {
        for (const Graph& g : {path_graph(3), complete_graph(4), edgeless_graph(2)}) {
            TightAdfaResult r = build_tight_adfa(g, optimal_coloring(g), k);
            CHECK(is_acyclic(r.machine.dfa));
            CHECK(r.machine.layering_holds());
            CHECK(r.size <= r.size_bound);
            CHECK(static_cast<bool>(is_consistent(r.machine.dfa, reduce_tight(g, k))));
        }
    }
}

TEST_CASE("nfa extraction yields a proper coloring") {
    Graph g = path_graph(3);
    LayeredDfa base = build_base_dfa(g);
    // A DFA is an NFA; the base machine is consistent by construction.
    Nfa n = Nfa::with_states(base.dfa.state_count, base.dfa.start);
    for (int q = 0; q < base.dfa.state_count; ++q) {
        for (int b = 0; b < 2; ++b)
            if (base.dfa.next(q, b) >= 0) n.add_trans(q, b, base.dfa.next(q, b));
        n.accepting[static_cast<size_t>(q)] = base.dfa.accepting[static_cast<size_t>(q)];
    }
    auto coloring = extract_coloring_from_nfa(n, g);
    CHECK(is_proper_coloring(g, coloring));
}

TEST_CASE("tight dfa extraction colors the padded power") {
    Graph g = path_graph(3);
    TightAdfaResult r = build_tight_adfa(g, optimal_coloring(g), 2);
    TightColoring tc = extract_coloring_from_dfa_tight(r.machine.dfa, g, 2);
    EncodingContext ctx = EncodingContext::for_graph(g);
    Graph power = k_fold_power(pad_with_isolated(g, ctx.padded_n), 2);
    CHECK(is_proper_coloring(power, tc.colors));
    CHECK(tc.classes_used >= chi_exact(g));
}
