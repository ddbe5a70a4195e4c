#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpr/graph.hpp"

namespace gpr {

// Grid gadget for a graph on n vertices: line i runs right along row y = i
// from s_i = (0, i), turns at (n+1-i, i) and runs down to t_i = (n+1-i, 0).
// Lines i < j cross at (n+1-j, i). A crossing is split (both lines share one
// arc x_in -> x_out) iff ij is an edge; otherwise the lines pass through the
// point independently. All arcs run rightward or downward, so the gadget is
// a DAG. Buffered variants add pass-through vertex pairs at every uncrossed
// point and at every corner.
enum class NodeKind {
    source,
    sink,
    corner,
    corner_in,
    corner_out,
    split_in,
    split_out,
    buffer_in,
    buffer_out,
};

struct GadgetNode {
    int id = 0;
    NodeKind kind = NodeKind::source;
    int x = 0, y = 0;
    int line = 0;    // owning line; 0 for shared split vertices
    int pair_i = 0;  // crossing pair (i < j), 0 if not a crossing vertex
    int pair_j = 0;
};

struct GadgetArc {
    int id = 0;
    int from = 0, to = 0;
    int line = 0;  // owning line; 0 for the shared split arc
    bool split_internal = false;
    int pair_i = 0, pair_j = 0;
};

struct SwitchingGraph {
    int n = 0;
    int g_size = 0;  // factor annotation: n = g_size * h_size
    int h_size = 1;
    bool buffered = false;
    Graph base;  // the graph whose edges decide splits

    std::vector<GadgetNode> nodes;
    std::vector<GadgetArc> arcs;
    std::vector<int> source;  // node id per line, index 0 unused
    std::vector<int> sink;
    std::vector<std::vector<int>> out_arcs;  // arc ids per node
    std::vector<std::vector<int>> in_arcs;

    int split_count() const;
    int uncrossed_count() const;
};

SwitchingGraph build_switching_graph(const Graph& g);
// Same gadget for lex_product(g, h), annotated with the factor structure.
SwitchingGraph build_switching_graph_product(const Graph& g, const Graph& h);

struct Path {
    std::vector<int> arcs;
};

struct PathSet {
    std::vector<Path> paths;
};

bool path_valid(const SwitchingGraph& w, const Path& p);
int path_source_line(const SwitchingGraph& w, const Path& p);
int path_sink_line(const SwitchingGraph& w, const Path& p);
bool arc_disjoint(const SwitchingGraph& w, const PathSet& ps);

// The straight right-then-down path of line i.
Path canonical_path(const SwitchingGraph& w, int line);

// Canonical paths for an independent set of base; arc-disjoint by
// construction (two canonical paths only meet at split crossings).
PathSet canonical_witness(const SwitchingGraph& w, const std::vector<int>& independent_set);

// Valid, pairwise arc-disjoint, and source/sink orders agree monotonically.
bool check_orderly_feasible(const SwitchingGraph& w, const PathSet& ps);

struct BoxInfo {
    int i = 0, j = 0;     // factor groups, i > j
    bool switching = false;  // true iff ij is NOT an edge of the factor
};

// Boxes in sweep (peel) order: i descending, then j descending.
std::vector<BoxInfo> classify_boxes(const SwitchingGraph& w);

struct ReversalTrace {
    std::vector<BoxInfo> boxes;
    std::vector<std::vector<int>> configurations;  // boxes.size() + 1 entries
    std::vector<int> reversals;                    // adjacent descents per configuration
    int max_drop = 0;  // largest reversal decrease across one step
    int traced = 0;    // number of traced paths
};

// Sweeps monotone curves across the boxes and records the order in which
// each curve crosses the traced paths. Paths are labeled 1..t by source
// height, topmost first. With skip_semi_canonical, paths that stay inside
// their own factor region are left out of the trace.
ReversalTrace reversal_trace(const SwitchingGraph& w, const PathSet& ps,
                             bool skip_semi_canonical = false);

// K_n minus the bipartite graph on A = {1..n/3}, B = {n/3+1..2n/3} with an
// edge iff |i-j| > n/3. Requires n >= 6 and n divisible by 3. Independence
// number 2, yet W carries n/3 disjoint three-turn paths for the B pairs.
Graph bad_example_graph(int n);

// The three-turn family: for each i in B a path row_i -> col_j1 -> row_j2 ->
// col_i with edges i-j1, j1-j2, j2-i; chosen pairwise arc-disjoint.
std::optional<PathSet> bad_example_witness(const SwitchingGraph& w);

struct CycleGadget {
    SwitchingGraph w;            // buffered gadget
    std::vector<int> back_arcs;  // arc id of t_i -> s_i per line, index 0 unused
    int k_threshold = 0;         // 2n + 2
};

CycleGadget build_cycle_gadget(const Graph& g);

struct Cycle {
    std::vector<int> arcs;
};

bool cycle_valid(const CycleGadget& cg, const Cycle& c);
int cycle_vertex_length(const Cycle& c);
int cycle_back_arc_count(const CycleGadget& cg, const Cycle& c);

// Node list with coordinates, arc list, terminal pairs.
void write_gadget(std::ostream& out, const SwitchingGraph& w);
void write_gadget(std::ostream& out, const CycleGadget& cg);
// Plain arc list, one "from to" line per arc.
void write_gadget_edges(std::ostream& out, const SwitchingGraph& w);

const char* node_kind_name(NodeKind k);

}  // namespace gpr
