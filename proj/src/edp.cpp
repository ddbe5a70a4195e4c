#include "gpr/edp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

namespace gpr {

namespace {

struct Builder {
    SwitchingGraph w;
    std::map<std::pair<int, int>, std::pair<int, int>> split_nodes;    // pair -> (in, out)
    std::map<std::pair<int, int>, std::pair<int, int>> row_buffers;    // pair -> (in, out), line = p
    std::map<std::pair<int, int>, std::pair<int, int>> col_buffers;    // pair -> (in, out), line = q
    std::map<int, std::pair<int, int>> corners;                        // line -> (in, out)

    int add_node(NodeKind kind, int x, int y, int line, int pi, int pj) {
        GadgetNode node;
        node.id = static_cast<int>(w.nodes.size());
        node.kind = kind;
        node.x = x;
        node.y = y;
        node.line = line;
        node.pair_i = pi;
        node.pair_j = pj;
        w.nodes.push_back(node);
        return node.id;
    }

    int add_arc(int from, int to, int line, bool split_internal, int pi, int pj) {
        GadgetArc arc;
        arc.id = static_cast<int>(w.arcs.size());
        arc.from = from;
        arc.to = to;
        arc.line = line;
        arc.split_internal = split_internal;
        arc.pair_i = pi;
        arc.pair_j = pj;
        w.arcs.push_back(arc);
        return arc.id;
    }

    void build(const Graph& g, bool buffered, int g_size, int h_size) {
        const int n = g.vertex_count();
        w.n = n;
        w.g_size = g_size;
        w.h_size = h_size;
        w.buffered = buffered;
        w.base = g;
        w.source.assign(static_cast<size_t>(n) + 1, -1);
        w.sink.assign(static_cast<size_t>(n) + 1, -1);

        for (int i = 1; i <= n; ++i) {
            w.source[static_cast<size_t>(i)] = add_node(NodeKind::source, 0, i, i, 0, 0);
            w.sink[static_cast<size_t>(i)] = add_node(NodeKind::sink, n + 1 - i, 0, i, 0, 0);
        }
        // Crossing of lines p < q at (n+1-q, p).
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                const int x = n + 1 - q, y = p;
                if (g.has_edge(p, q)) {
                    int in = add_node(NodeKind::split_in, x, y, 0, p, q);
                    int out = add_node(NodeKind::split_out, x, y, 0, p, q);
                    add_arc(in, out, 0, true, p, q);
                    split_nodes[{p, q}] = {in, out};
                } else if (buffered) {
                    int rin = add_node(NodeKind::buffer_in, x, y, p, p, q);
                    int rout = add_node(NodeKind::buffer_out, x, y, p, p, q);
                    add_arc(rin, rout, p, false, p, q);
                    row_buffers[{p, q}] = {rin, rout};
                    int cin = add_node(NodeKind::buffer_in, x, y, q, p, q);
                    int cout = add_node(NodeKind::buffer_out, x, y, q, p, q);
                    add_arc(cin, cout, q, false, p, q);
                    col_buffers[{p, q}] = {cin, cout};
                }
            }
        for (int i = 1; i <= n; ++i) {
            const int x = n + 1 - i, y = i;
            if (buffered) {
                int cin = add_node(NodeKind::corner_in, x, y, i, i, i);
                int cout = add_node(NodeKind::corner_out, x, y, i, i, i);
                add_arc(cin, cout, i, false, i, i);
                corners[i] = {cin, cout};
            } else {
                int c = add_node(NodeKind::corner, x, y, i, i, i);
                corners[i] = {c, c};
            }
        }

        // Per-line chains. Row of line q meets columns of lines r > q in
        // order of increasing x (r descending); its column meets rows of
        // lines p < q in order of decreasing y (p descending).
        for (int q = 1; q <= n; ++q) {
            int prev_out = w.source[static_cast<size_t>(q)];
            auto link = [&](std::pair<int, int> station) {
                add_arc(prev_out, station.first, q, false, 0, 0);
                prev_out = station.second;
            };
            for (int r = n; r > q; --r) {
                if (auto it = split_nodes.find({q, r}); it != split_nodes.end()) {
                    link(it->second);
                } else if (auto rb = row_buffers.find({q, r}); rb != row_buffers.end()) {
                    link(rb->second);
                }
            }
            link(corners[q]);
            for (int p = q - 1; p >= 1; --p) {
                if (auto it = split_nodes.find({p, q}); it != split_nodes.end()) {
                    link(it->second);
                } else if (auto cb = col_buffers.find({p, q}); cb != col_buffers.end()) {
                    link(cb->second);
                }
            }
            add_arc(prev_out, w.sink[static_cast<size_t>(q)], q, false, 0, 0);
        }

        w.out_arcs.assign(w.nodes.size(), {});
        w.in_arcs.assign(w.nodes.size(), {});
        for (const auto& arc : w.arcs) {
            w.out_arcs[static_cast<size_t>(arc.from)].push_back(arc.id);
            w.in_arcs[static_cast<size_t>(arc.to)].push_back(arc.id);
        }
    }
};

}  // namespace

int SwitchingGraph::split_count() const { return base.edge_count(); }

int SwitchingGraph::uncrossed_count() const {
    return n * (n - 1) / 2 - base.edge_count();
}

SwitchingGraph build_switching_graph(const Graph& g) {
    Builder b;
    b.build(g, false, g.vertex_count(), 1);
    return std::move(b.w);
}

SwitchingGraph build_switching_graph_product(const Graph& g, const Graph& h) {
    Builder b;
    b.build(lex_product(g, h), false, g.vertex_count(), h.vertex_count());
    return std::move(b.w);
}

bool path_valid(const SwitchingGraph& w, const Path& p) {
    if (p.arcs.empty()) return false;
    std::set<int> seen;
    for (size_t i = 0; i < p.arcs.size(); ++i) {
        int a = p.arcs[i];
        if (a < 0 || a >= static_cast<int>(w.arcs.size())) return false;
        if (!seen.insert(a).second) return false;
        if (i > 0 && w.arcs[static_cast<size_t>(p.arcs[i - 1])].to !=
                         w.arcs[static_cast<size_t>(a)].from)
            return false;
    }
    int first = w.arcs[static_cast<size_t>(p.arcs.front())].from;
    int last = w.arcs[static_cast<size_t>(p.arcs.back())].to;
    return w.nodes[static_cast<size_t>(first)].kind == NodeKind::source &&
           w.nodes[static_cast<size_t>(last)].kind == NodeKind::sink;
}

int path_source_line(const SwitchingGraph& w, const Path& p) {
    return w.nodes[static_cast<size_t>(w.arcs[static_cast<size_t>(p.arcs.front())].from)].line;
}

int path_sink_line(const SwitchingGraph& w, const Path& p) {
    return w.nodes[static_cast<size_t>(w.arcs[static_cast<size_t>(p.arcs.back())].to)].line;
}

bool arc_disjoint(const SwitchingGraph& w, const PathSet& ps) {
    (void)w;
    std::set<int> used;
    for (const auto& p : ps.paths)
        for (int a : p.arcs)
            if (!used.insert(a).second) return false;
    return true;
}

Path canonical_path(const SwitchingGraph& w, int line) {
    if (line < 1 || line > w.n) throw std::out_of_range("line index out of range");
    Path p;
    int cur = w.source[static_cast<size_t>(line)];
    const int target = w.sink[static_cast<size_t>(line)];
    while (cur != target) {
        int chosen = -1;
        for (int a : w.out_arcs[static_cast<size_t>(cur)]) {
            const auto& arc = w.arcs[static_cast<size_t>(a)];
            if (arc.line == line || arc.split_internal) {
                chosen = a;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("canonical walk is stuck");
        p.arcs.push_back(chosen);
        cur = w.arcs[static_cast<size_t>(chosen)].to;
    }
    return p;
}

PathSet canonical_witness(const SwitchingGraph& w, const std::vector<int>& independent_set) {
    for (int u : independent_set)
        for (int v : independent_set)
            if (u != v && w.base.has_edge(u, v))
                throw std::invalid_argument("vertex set is not independent");
    PathSet ps;
    std::vector<int> sorted = independent_set;
    std::sort(sorted.begin(), sorted.end());
    for (int u : sorted) ps.paths.push_back(canonical_path(w, u));
    if (!arc_disjoint(w, ps)) throw std::logic_error("canonical witness shares an arc");
    return ps;
}

bool check_orderly_feasible(const SwitchingGraph& w, const PathSet& ps) {
    std::vector<std::pair<int, int>> ends;
    for (const auto& p : ps.paths) {
        if (!path_valid(w, p)) return false;
        ends.emplace_back(path_source_line(w, p), path_sink_line(w, p));
    }
    if (!arc_disjoint(w, ps)) return false;
    std::sort(ends.begin(), ends.end());
    for (size_t i = 1; i < ends.size(); ++i) {
        if (ends[i].first == ends[i - 1].first) return false;
        if (ends[i].second <= ends[i - 1].second) return false;
    }
    return true;
}

std::vector<BoxInfo> classify_boxes(const SwitchingGraph& w) {
    std::vector<BoxInfo> boxes;
    for (int i = w.g_size; i >= 2; --i)
        for (int j = i - 1; j >= 1; --j) {
            BoxInfo box;
            box.i = i;
            box.j = j;
            int p = (j - 1) * w.h_size + 1;
            int q = (i - 1) * w.h_size + 1;
            box.switching = !w.base.has_edge(p, q);
            boxes.push_back(box);
        }
    return boxes;
}

namespace {

struct Point {
    double x = 0, y = 0;
};

struct Segment {
    Point a, b;
};

std::vector<Segment> path_segments(const SwitchingGraph& w, const Path& p) {
    std::vector<Point> pts;
    auto push = [&](int node) {
        Point pt{static_cast<double>(w.nodes[static_cast<size_t>(node)].x),
                 static_cast<double>(w.nodes[static_cast<size_t>(node)].y)};
        if (pts.empty() || pts.back().x != pt.x || pts.back().y != pt.y) pts.push_back(pt);
    };
    push(w.arcs[static_cast<size_t>(p.arcs.front())].from);
    for (int a : p.arcs) push(w.arcs[static_cast<size_t>(a)].to);
    std::vector<Segment> segs;
    for (size_t i = 1; i < pts.size(); ++i) segs.push_back({pts[i - 1], pts[i]});
    return segs;
}

// Monotone staircase curve: heights per factor band plus a start riser.
std::vector<Segment> sweep_curve(const SwitchingGraph& w, const std::vector<double>& height) {
    const double top = w.n + 0.75;
    std::vector<Segment> segs;
    Point cur{0.25, 0.0};
    for (int i = w.g_size; i >= 1; --i) {
        double hgt = height[static_cast<size_t>(i)];
        if (hgt > cur.y) {
            segs.push_back({cur, {cur.x, hgt}});
            cur.y = hgt;
        }
        double right = w.n + 0.5 - static_cast<double>(i - 1) * w.h_size;
        segs.push_back({cur, {right, cur.y}});
        cur.x = right;
    }
    if (top > cur.y) segs.push_back({cur, {cur.x, top}});
    return segs;
}

// Key of the unique transversal crossing of a monotone-down path with a
// monotone-up curve: (curve segment index, coordinate along the segment).
std::pair<int, double> crossing_key(const std::vector<Segment>& curve,
                                    const std::vector<Segment>& path) {
    std::vector<std::pair<int, double>> hits;
    for (size_t ci = 0; ci < curve.size(); ++ci) {
        const Segment& c = curve[ci];
        const bool c_vertical = (c.a.x == c.b.x);
        for (const Segment& s : path) {
            if (c_vertical) {
                if (s.a.y != s.b.y) continue;  // path horizontal vs curve vertical
                double x1 = std::min(s.a.x, s.b.x), x2 = std::max(s.a.x, s.b.x);
                if (x1 < c.a.x && c.a.x < x2 && c.a.y < s.a.y && s.a.y < c.b.y)
                    hits.emplace_back(static_cast<int>(ci), s.a.y);
            } else {
                if (s.a.x != s.b.x) continue;  // path vertical vs curve horizontal
                double y1 = std::min(s.a.y, s.b.y), y2 = std::max(s.a.y, s.b.y);
                if (y1 < c.a.y && c.a.y < y2 && c.a.x < s.a.x && s.a.x < c.b.x)
                    hits.emplace_back(static_cast<int>(ci), s.a.x);
            }
        }
    }
    if (hits.size() != 1) throw std::logic_error("path must cross a sweep curve exactly once");
    return hits.front();
}

int adjacent_descents(const std::vector<int>& order) {
    int r = 0;
    for (size_t i = 1; i < order.size(); ++i)
        if (order[i - 1] > order[i]) ++r;
    return r;
}

bool semi_canonical(const SwitchingGraph& w, const Path& p) {
    int src = path_source_line(w, p);
    int group = (src - 1) / w.h_size + 1;
    double ylo = (group - 1) * w.h_size + 1, yhi = group * w.h_size;
    double xlo = w.n + 1 - group * w.h_size, xhi = w.n - (group - 1) * w.h_size;
    auto inside = [&](const GadgetNode& node) {
        return (node.y >= ylo && node.y <= yhi) || (node.x >= xlo && node.x <= xhi) ||
               node.y == 0 || node.x == 0;
    };
    for (int a : p.arcs) {
        const auto& arc = w.arcs[static_cast<size_t>(a)];
        if (!inside(w.nodes[static_cast<size_t>(arc.from)]) ||
            !inside(w.nodes[static_cast<size_t>(arc.to)]))
            return false;
    }
    return true;
}

}  // namespace

ReversalTrace reversal_trace(const SwitchingGraph& w, const PathSet& ps,
                             bool skip_semi_canonical) {
    ReversalTrace trace;
    trace.boxes = classify_boxes(w);

    std::vector<const Path*> traced;
    for (const auto& p : ps.paths) {
        if (!path_valid(w, p)) throw std::invalid_argument("trace requires valid paths");
        if (skip_semi_canonical && semi_canonical(w, p)) continue;
        traced.push_back(&p);
    }
    // Label 1 is the path with the topmost source.
    std::sort(traced.begin(), traced.end(), [&](const Path* a, const Path* b) {
        return path_source_line(w, *a) > path_source_line(w, *b);
    });
    trace.traced = static_cast<int>(traced.size());
    std::vector<std::vector<Segment>> geometry;
    for (const Path* p : traced) geometry.push_back(path_segments(w, *p));

    const double top = w.n + 0.75;
    std::vector<double> height(static_cast<size_t>(w.g_size) + 1, top);
    auto record = [&]() {
        auto curve = sweep_curve(w, height);
        std::vector<std::pair<std::pair<int, double>, int>> order;
        for (size_t t = 0; t < geometry.size(); ++t)
            order.emplace_back(crossing_key(curve, geometry[t]), static_cast<int>(t) + 1);
        std::sort(order.begin(), order.end());
        std::vector<int> config;
        for (const auto& [key, label] : order) config.push_back(label);
        trace.reversals.push_back(adjacent_descents(config));
        trace.configurations.push_back(std::move(config));
    };

    record();
    for (const auto& box : trace.boxes) {
        height[static_cast<size_t>(box.i)] =
            static_cast<double>(box.j - 1) * w.h_size + 0.5;
        record();
    }
    for (size_t i = 1; i < trace.reversals.size(); ++i)
        trace.max_drop = std::max(trace.max_drop, trace.reversals[i - 1] - trace.reversals[i]);
    return trace;
}

Graph bad_example_graph(int n) {
    if (n < 6 || n % 3 != 0) throw std::invalid_argument("bad example needs n >= 6, n = 0 mod 3");
    Graph g = complete_graph(n);
    Graph out(n);
    for (auto [u, v] : g.edges()) {
        bool removed = u <= n / 3 && v > n / 3 && v <= 2 * n / 3 && (v - u) > n / 3;
        if (!removed) out.add_edge(u, v);
    }
    return out;
}

namespace {

// Three-turn staircase row_i -> col_j1 -> row_j2 -> col_i (j1 > i, j2 < i).
Path three_turn_path(const SwitchingGraph& w, int i, int j1, int j2) {
    struct Turn {
        std::pair<int, int> at;
        int to_line;
    };
    std::vector<Turn> turns = {{{std::min(i, j1), std::max(i, j1)}, j1},
                               {{j2, j1}, j2},
                               {{j2, i}, i}};
    size_t next_turn = 0;
    Path p;
    int line = i;
    int cur = w.source[static_cast<size_t>(i)];
    const int target = w.sink[static_cast<size_t>(i)];
    while (cur != target) {
        const auto& node = w.nodes[static_cast<size_t>(cur)];
        int want_line = line;
        if (node.kind == NodeKind::split_out && next_turn < turns.size() &&
            std::pair{node.pair_i, node.pair_j} == turns[next_turn].at) {
            want_line = turns[next_turn].to_line;
            line = want_line;
            ++next_turn;
        }
        int chosen = -1;
        for (int a : w.out_arcs[static_cast<size_t>(cur)]) {
            const auto& arc = w.arcs[static_cast<size_t>(a)];
            if (arc.line == want_line || arc.split_internal) {
                chosen = a;
                break;
            }
        }
        if (chosen < 0) throw std::logic_error("three-turn walk is stuck");
        p.arcs.push_back(chosen);
        cur = w.arcs[static_cast<size_t>(chosen)].to;
    }
    if (next_turn != turns.size()) throw std::logic_error("three-turn walk missed a turn");
    return p;
}

bool pick_disjoint(const SwitchingGraph& w, const std::vector<std::vector<Path>>& candidates,
                   size_t idx, std::set<int>& used, std::vector<Path>& chosen) {
    if (idx == candidates.size()) return true;
    for (const Path& p : candidates[idx]) {
        bool clash = false;
        for (int a : p.arcs)
            if (used.count(a)) {
                clash = true;
                break;
            }
        if (clash) continue;
        for (int a : p.arcs) used.insert(a);
        chosen.push_back(p);
        if (pick_disjoint(w, candidates, idx + 1, used, chosen)) return true;
        chosen.pop_back();
        for (int a : p.arcs) used.erase(a);
    }
    return false;
}

}  // namespace

std::optional<PathSet> bad_example_witness(const SwitchingGraph& w) {
    const int n = w.n;
    if (n < 6 || n % 3 != 0) return std::nullopt;
    std::vector<std::vector<Path>> candidates;
    for (int i = n / 3 + 1; i <= 2 * n / 3; ++i) {
        std::vector<Path> options;
        for (int j1 = i + 1; j1 <= n; ++j1) {
            if (!w.base.has_edge(i, j1)) continue;
            for (int j2 = 1; j2 < i; ++j2) {
                if (j2 == j1) continue;
                if (!w.base.has_edge(j1, j2) || !w.base.has_edge(j2, i)) continue;
                options.push_back(three_turn_path(w, i, j1, j2));
            }
        }
        if (options.empty()) return std::nullopt;
        candidates.push_back(std::move(options));
    }
    std::set<int> used;
    std::vector<Path> chosen;
    if (!pick_disjoint(w, candidates, 0, used, chosen)) return std::nullopt;
    PathSet ps;
    ps.paths = std::move(chosen);
    return ps;
}

CycleGadget build_cycle_gadget(const Graph& g) {
    CycleGadget cg;
    Builder b;
    b.build(g, true, g.vertex_count(), 1);
    cg.w = std::move(b.w);
    cg.back_arcs.assign(static_cast<size_t>(cg.w.n) + 1, -1);
    for (int i = 1; i <= cg.w.n; ++i) {
        GadgetArc arc;
        arc.id = static_cast<int>(cg.w.arcs.size());
        arc.from = cg.w.sink[static_cast<size_t>(i)];
        arc.to = cg.w.source[static_cast<size_t>(i)];
        arc.line = i;
        cg.w.arcs.push_back(arc);
        cg.w.out_arcs[static_cast<size_t>(arc.from)].push_back(arc.id);
        cg.w.in_arcs[static_cast<size_t>(arc.to)].push_back(arc.id);
        cg.back_arcs[static_cast<size_t>(i)] = arc.id;
    }
    cg.k_threshold = 2 * cg.w.n + 2;
    return cg;
}

bool cycle_valid(const CycleGadget& cg, const Cycle& c) {
    if (c.arcs.empty()) return false;
    const auto& w = cg.w;
    std::set<int> arc_seen, vert_seen;
    for (size_t i = 0; i < c.arcs.size(); ++i) {
        int a = c.arcs[i];
        if (a < 0 || a >= static_cast<int>(w.arcs.size())) return false;
        if (!arc_seen.insert(a).second) return false;
        if (!vert_seen.insert(w.arcs[static_cast<size_t>(a)].from).second) return false;
        size_t prev = (i + c.arcs.size() - 1) % c.arcs.size();
        if (w.arcs[static_cast<size_t>(c.arcs[prev])].to != w.arcs[static_cast<size_t>(a)].from)
            return false;
    }
    return cycle_back_arc_count(cg, c) >= 1;
}

int cycle_vertex_length(const Cycle& c) { return static_cast<int>(c.arcs.size()); }

int cycle_back_arc_count(const CycleGadget& cg, const Cycle& c) {
    std::set<int> back(cg.back_arcs.begin(), cg.back_arcs.end());
    int count = 0;
    for (int a : c.arcs)
        if (back.count(a)) ++count;
    return count;
}

void write_gadget(std::ostream& out, const SwitchingGraph& w) {
    out << "gadget " << w.n << ' ' << w.nodes.size() << ' ' << w.arcs.size() << '\n';
    for (const auto& node : w.nodes)
        out << "node " << node.id << ' ' << node_kind_name(node.kind) << ' ' << node.x << ' '
            << node.y << ' ' << node.line << '\n';
    for (const auto& arc : w.arcs) out << "arc " << arc.id << ' ' << arc.from << ' ' << arc.to << '\n';
    for (int i = 1; i <= w.n; ++i)
        out << "pair " << i << ' ' << w.source[static_cast<size_t>(i)] << ' '
            << w.sink[static_cast<size_t>(i)] << '\n';
}

void write_gadget(std::ostream& out, const CycleGadget& cg) {
    out << "# cycle gadget, length threshold " << cg.k_threshold << '\n';
    write_gadget(out, cg.w);
}

void write_gadget_edges(std::ostream& out, const SwitchingGraph& w) {
    for (const auto& arc : w.arcs) out << arc.from << ' ' << arc.to << '\n';
}

const char* node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::source: return "source";
        case NodeKind::sink: return "sink";
        case NodeKind::corner: return "corner";
        case NodeKind::corner_in: return "corner_in";
        case NodeKind::corner_out: return "corner_out";
        case NodeKind::split_in: return "split_in";
        case NodeKind::split_out: return "split_out";
        case NodeKind::buffer_in: return "buffer_in";
        case NodeKind::buffer_out: return "buffer_out";
    }
    return "unknown";
}

}  // namespace gpr
