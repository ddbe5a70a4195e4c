#pragma once

#include <cstdint>
#include <vector>

#include "gpr/automata.hpp"
#include "gpr/graph.hpp"

namespace gpr {

// Fixed-width big-endian vertex encoding; vertex counts are padded to the
// next power of two with isolated vertices.
struct EncodingContext {
    int n = 0;         // original vertex count
    int k_bits = 0;    // ceil(log2 n)
    int padded_n = 0;  // 2^k_bits

    static EncodingContext for_count(int n);
    static EncodingContext for_graph(const Graph& g) { return for_count(g.vertex_count()); }

    BitString encode(int u) const;          // u in 1..padded_n
    BitString encode_reversed(int u) const;
    int decode(const BitString& s, size_t offset) const;  // k_bits bits at offset
};

BitString reversed(const BitString& s);

// Samples enc(u) 1 rev(enc(u)) as positives (every padded vertex) and
// enc(u) 1 rev(enc(v)) in both orientations per edge as negatives.
// Requires |V(g)| >= 2. Sample length is 2*k_bits + 1.
SampleSet reduce_quadratic(const Graph& g);
SampleSet reduce_quadratic(const Graph& g, const EncodingContext& ctx);

// Tuple samples for the k-fold power of the padded graph:
//   pos(u, i) = enc(u_1)..enc(u_k) 1 enc(u_1)..enc(u_i)        i in 1..k
//   neg(u, v, i) = same with enc(v) at block i, for u_i v in E(g)
// |positives| = k * padded_n^k. Requires |V(g)| >= 2.
SampleSet reduce_tight(const Graph& g, int k);
SampleSet reduce_tight(const Graph& g, int k, const EncodingContext& ctx);

// DFA whose every defined transition increases the layer by exactly one.
struct LayeredDfa {
    Dfa dfa;
    std::vector<int> layer;

    int depth() const;
    bool layering_holds() const;
};

// Complete binary prefix tree of depth 2*k_bits + 1 accepting exactly the
// positive samples of reduce_quadratic(g). Size 2^(2*k_bits + 2) - 1.
LayeredDfa build_base_dfa(const Graph& g);

struct ProductDfaResult {
    LayeredDfa machine;
    int copies = 0;          // number of color classes used
    int base_size = 0;       // states of the h-machine
    int size = 0;            // explicit states of the product machine
    int size_bound = 0;      // copies * (base_size + C * |V(g)|), C = 8
    double realized_c = 0.0;
};

// Canonical machine for the quadratic reduction of pad(g) x pad(h): a vertex
// tree over enc(u) entered first, one copy of the h-machine per color class
// of g, then a per-copy reversed vertex tree accepting rev(enc(u)) exactly
// for the vertices of that class. Null transitions are resolved by merging.
ProductDfaResult build_product_dfa(const Graph& g, const std::vector<int>& g_coloring,
                                   const LayeredDfa& h_machine);

struct TightAdfaResult {
    LayeredDfa machine;
    int colors = 0;     // c, colors used by the g-coloring
    int size = 0;
    int size_bound = 0;  // 2 * padded_n * c^(2k) for c >= 2, else 2 * padded_n * (2k+1)
};

// Acyclic DFA consistent with reduce_tight(g, k): a complete c-ary skeleton
// of 2k levels whose nodes are binary vertex trees; child edges are gated by
// leaf color, the separator '1' fires at level k, and a leaf after the
// separator accepts iff its color matches the matching ancestor color.
TightAdfaResult build_tight_adfa(const Graph& g, const std::vector<int>& g_coloring, int k);

// Proper coloring of g extracted from any NFA consistent with
// reduce_quadratic(g): vertex u takes the smallest state reachable on
// enc(u) but on no neighbor's encoding. Colors are 1-based state ids + 1.
std::vector<int> extract_coloring_from_nfa(const Nfa& m, const Graph& g);

// Coloring of the k-fold power of pad(g) from a DFA consistent with
// reduce_tight(g, k): the class of a tuple is the state reached on its
// k-block prefix. Indexed by mixed-radix tuple rank over padded vertices.
struct TightColoring {
    std::vector<int> colors;  // 1-based class ids
    int classes_used = 0;
};
TightColoring extract_coloring_from_dfa_tight(const Dfa& m, const Graph& g, int k);

}  // namespace gpr
