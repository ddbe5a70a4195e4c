#include "gpr/oracles.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>

namespace gpr {

namespace {

using Clock = std::chrono::steady_clock;

thread_local Clock::time_point g_budget_start;

}  // namespace

bool SearchBudget::tick() {
    if (exhausted) return false;
    if (nodes == 0) g_budget_start = Clock::now();
    ++nodes;
    if (max_nodes > 0 && nodes > max_nodes) exhausted = true;
    if (max_seconds > 0 && nodes % 8192 == 0 &&
        std::chrono::duration<double>(Clock::now() - g_budget_start).count() > max_seconds)
        exhausted = true;
    return !exhausted;
}

namespace {

// Prefix tree over all samples, labels 1/0/-1 (positive/negative/none).
struct PrefixTree {
    std::vector<std::array<int, 2>> child;  // -1 = absent
    std::vector<int> label;

    int size() const { return static_cast<int>(child.size()); }

    int insert(const BitString& s) {
        if (child.empty()) {
            child.push_back({-1, -1});
            label.push_back(-1);
        }
        int cur = 0;
        for (size_t i = 0; i < s.size(); ++i) {
            int bit = s[i];
            if (child[static_cast<size_t>(cur)][static_cast<size_t>(bit)] < 0) {
                child[static_cast<size_t>(cur)][static_cast<size_t>(bit)] = size();
                child.push_back({-1, -1});
                label.push_back(-1);
            }
            cur = child[static_cast<size_t>(cur)][static_cast<size_t>(bit)];
        }
        return cur;
    }
};

PrefixTree build_prefix_tree(const SampleSet& samples) {
    PrefixTree t;
    t.insert(BitString());
    for (const auto& s : samples.positives()) t.label[static_cast<size_t>(t.insert(s))] = 1;
    for (const auto& s : samples.negatives()) t.label[static_cast<size_t>(t.insert(s))] = 0;
    return t;
}

Dfa prefix_tree_dfa(const PrefixTree& t) {
    Dfa m = Dfa::with_states(t.size());
    for (int q = 0; q < t.size(); ++q) {
        for (int b = 0; b < 2; ++b)
            if (t.child[static_cast<size_t>(q)][static_cast<size_t>(b)] >= 0)
                m.set_trans(q, b, t.child[static_cast<size_t>(q)][static_cast<size_t>(b)]);
        m.accepting[static_cast<size_t>(q)] = t.label[static_cast<size_t>(q)] == 1;
    }
    return m;
}

// Folds the prefix tree into at most s explicit states; new states are
// introduced in increasing order to break symmetry. Subtrees without any
// positive label may fold into the implicit dead state (kDead), matching
// the partial-transition machine model.
struct DfaFold {
    static constexpr int kDead = -2;

    const PrefixTree& tree;
    int s;
    SearchBudget& budget;
    std::vector<int> order;  // breadth-first
    std::vector<char> has_pos;
    std::vector<int> state_of;
    std::vector<std::array<int, 2>> delta;  // -1 unassigned, kDead, or a state
    std::vector<int> acc;                   // -1 unknown
    int used = 1;

    DfaFold(const PrefixTree& t, int states, SearchBudget& b) : tree(t), s(states), budget(b) {
        order.reserve(static_cast<size_t>(tree.size()));
        order.push_back(0);
        for (size_t i = 0; i < order.size(); ++i)
            for (int b2 = 0; b2 < 2; ++b2) {
                int c = tree.child[static_cast<size_t>(order[i])][static_cast<size_t>(b2)];
                if (c >= 0) order.push_back(c);
            }
        has_pos.assign(static_cast<size_t>(tree.size()), 0);
        for (size_t i = order.size(); i-- > 0;) {
            int node = order[i];
            char any = tree.label[static_cast<size_t>(node)] == 1;
            for (int b2 = 0; b2 < 2; ++b2) {
                int c = tree.child[static_cast<size_t>(node)][static_cast<size_t>(b2)];
                if (c >= 0) any = any || has_pos[static_cast<size_t>(c)];
            }
            has_pos[static_cast<size_t>(node)] = any;
        }
        state_of.assign(static_cast<size_t>(tree.size()), -1);
        delta.assign(static_cast<size_t>(s), {-1, -1});
        acc.assign(static_cast<size_t>(s), -1);
    }

    bool go(size_t idx, int stage) {
        if (idx == order.size()) return true;
        int node = order[idx];
        int q = state_of[static_cast<size_t>(node)];
        if (stage == 0) {
            if (!budget.tick()) return false;
            if (q == kDead) return go(idx, 1);
            int lab = tree.label[static_cast<size_t>(node)];
            if (lab < 0) return go(idx, 1);
            if (acc[static_cast<size_t>(q)] < 0) {
                acc[static_cast<size_t>(q)] = lab;
                if (go(idx, 1)) return true;
                acc[static_cast<size_t>(q)] = -1;
                return false;
            }
            return acc[static_cast<size_t>(q)] == lab && go(idx, 1);
        }
        if (stage == 3) return go(idx + 1, 0);
        int bit = stage - 1;
        int c = tree.child[static_cast<size_t>(node)][static_cast<size_t>(bit)];
        if (c < 0) return go(idx, stage + 1);
        if (q == kDead) {
            state_of[static_cast<size_t>(c)] = kDead;
            return go(idx, stage + 1);
        }
        int dv = delta[static_cast<size_t>(q)][static_cast<size_t>(bit)];
        if (dv != -1) {
            if (dv == kDead && has_pos[static_cast<size_t>(c)]) return false;
            state_of[static_cast<size_t>(c)] = dv;
            return go(idx, stage + 1);
        }
        if (!has_pos[static_cast<size_t>(c)]) {
            delta[static_cast<size_t>(q)][static_cast<size_t>(bit)] = kDead;
            state_of[static_cast<size_t>(c)] = kDead;
            if (go(idx, stage + 1)) return true;
            delta[static_cast<size_t>(q)][static_cast<size_t>(bit)] = -1;
            if (budget.exhausted) return false;
        }
        int limit = std::min(used, s - 1);
        for (int t = 0; t <= limit; ++t) {
            delta[static_cast<size_t>(q)][static_cast<size_t>(bit)] = t;
            state_of[static_cast<size_t>(c)] = t;
            int old_used = used;
            used = std::max(used, t + 1);
            if (go(idx, stage + 1)) return true;
            used = old_used;
            delta[static_cast<size_t>(q)][static_cast<size_t>(bit)] = -1;
            if (budget.exhausted) return false;
        }
        return false;
    }

    std::optional<Dfa> solve() {
        state_of[0] = 0;
        if (!go(0, 0)) return std::nullopt;
        Dfa m = Dfa::with_states(s);
        for (int q = 0; q < s; ++q) {
            for (int b = 0; b < 2; ++b)
                if (delta[static_cast<size_t>(q)][static_cast<size_t>(b)] >= 0)
                    m.set_trans(q, b, delta[static_cast<size_t>(q)][static_cast<size_t>(b)]);
            m.accepting[static_cast<size_t>(q)] = acc[static_cast<size_t>(q)] == 1;
        }
        return m;
    }
};

}  // namespace

DfaOracleResult min_consistent_dfa(const SampleSet& samples, SearchBudget& budget) {
    DfaOracleResult res;
    PrefixTree tree = build_prefix_tree(samples);
    for (int s = 1; s <= tree.size(); ++s) {
        DfaFold fold(tree, s, budget);
        auto m = fold.solve();
        if (m) {
            res.exact = true;
            res.lower = res.upper = s;
            res.machine = std::move(m);
            return res;
        }
        if (budget.exhausted) {
            res.exact = false;
            res.lower = s;
            res.upper = tree.size();
            res.machine = prefix_tree_dfa(tree);
            return res;
        }
    }
    res.exact = true;
    res.lower = res.upper = tree.size();
    res.machine = prefix_tree_dfa(tree);
    return res;
}

NfaOracleResult min_consistent_nfa(const SampleSet& samples, SearchBudget& budget,
                                   int max_states) {
    NfaOracleResult res;
    for (int s = 1; s <= max_states; ++s) {
        const uint64_t mask_space = uint64_t{1} << s;
        std::vector<uint64_t> masks(static_cast<size_t>(2 * s), 0);
        bool done = false;
        Nfa found;
        // Odometer over all transition mask tuples, then accepting sets.
        while (!done) {
            if (!budget.tick()) {
                res.exact = false;
                res.lower = s;
                res.upper = max_states + 1;
                return res;
            }
            for (uint64_t acc = 0; acc < mask_space; ++acc) {
                Nfa m = Nfa::with_states(s);
                for (int q = 0; q < s; ++q) {
                    m.trans[static_cast<size_t>(q)][0] = masks[static_cast<size_t>(2 * q)];
                    m.trans[static_cast<size_t>(q)][1] = masks[static_cast<size_t>(2 * q + 1)];
                    m.accepting[static_cast<size_t>(q)] = (acc >> q) & 1;
                }
                if (is_consistent(m, samples)) {
                    found = m;
                    res.exact = true;
                    res.lower = res.upper = s;
                    res.machine = found;
                    return res;
                }
            }
            size_t pos = 0;
            while (pos < masks.size() && masks[pos] + 1 == mask_space) masks[pos++] = 0;
            if (pos == masks.size())
                done = true;
            else
                ++masks[pos];
        }
    }
    res.exact = false;
    res.lower = max_states + 1;
    res.upper = build_prefix_tree(samples).size();  // a DFA is an NFA
    res.machine = std::nullopt;
    return res;
}

namespace {

struct EdpSearch {
    const SwitchingGraph& w;
    SearchBudget& budget;
    bool orderly;
    std::vector<char> used;
    std::vector<int> cur_arcs;
    std::vector<Path> cur_paths;
    std::vector<Path> best_paths;
    int best = -1;

    EdpSearch(const SwitchingGraph& sw, SearchBudget& b, bool ord)
        : w(sw), budget(b), orderly(ord), used(sw.arcs.size(), 0) {}

    void routes(int line, int last_sink, int node, int count) {
        if (budget.exhausted) return;
        const auto& nd = w.nodes[static_cast<size_t>(node)];
        if (nd.kind == NodeKind::sink) {
            bool ok = orderly ? nd.line > last_sink : nd.line == line;
            if (ok) {
                Path p;
                p.arcs = cur_arcs;
                cur_paths.push_back(p);
                for (int a : cur_arcs) used[static_cast<size_t>(a)] = 1;
                choose(line + 1, count + 1, nd.line);
                for (int a : cur_arcs) used[static_cast<size_t>(a)] = 0;
                cur_paths.pop_back();
            }
            return;
        }
        for (int a : w.out_arcs[static_cast<size_t>(node)]) {
            if (used[static_cast<size_t>(a)]) continue;
            if (!budget.tick()) return;
            cur_arcs.push_back(a);
            routes(line, last_sink, w.arcs[static_cast<size_t>(a)].to, count);
            cur_arcs.pop_back();
        }
    }

    void choose(int line, int count, int last_sink) {
        if (count + (w.n - line + 1) <= best) return;
        if (line > w.n) {
            if (count > best) {
                best = count;
                best_paths = cur_paths;
            }
            return;
        }
        if (count > best) {
            best = count;
            best_paths = cur_paths;
        }
        std::vector<int> saved = std::move(cur_arcs);
        cur_arcs.clear();
        routes(line, last_sink, w.source[static_cast<size_t>(line)], count);
        cur_arcs = std::move(saved);
        choose(line + 1, count, last_sink);
    }
};

}  // namespace

EdpOracleResult edp_exact(const SwitchingGraph& w, SearchBudget& budget, bool orderly) {
    EdpSearch search(w, budget, orderly);
    search.choose(1, 0, 0);
    EdpOracleResult res;
    res.lower = std::max(search.best, 0);
    res.witness.paths = std::move(search.best_paths);
    res.exact = !budget.exhausted;
    res.upper = res.exact ? res.lower : w.n;
    return res;
}

namespace {

struct CycleSearch {
    const CycleGadget& cg;
    int max_len;
    SearchBudget& budget;
    std::vector<char> used;
    std::vector<char> visited;  // nodes on the cycle being built
    std::vector<int> cur_arcs;
    std::vector<Cycle> cur_cycles;
    std::vector<Cycle> best_cycles;
    int best = -1;

    CycleSearch(const CycleGadget& g, int len, SearchBudget& b)
        : cg(g), max_len(len), budget(b), used(g.w.arcs.size(), 0), visited(g.w.nodes.size(), 0) {}

    bool is_back(int arc) const {
        const auto& a = cg.w.arcs[static_cast<size_t>(arc)];
        return cg.w.nodes[static_cast<size_t>(a.from)].kind == NodeKind::sink &&
               cg.w.nodes[static_cast<size_t>(a.to)].kind == NodeKind::source;
    }

    // Walks forward from node; anchor is the minimal back-arc line of the
    // cycle under construction.
    void walk(int anchor, int node, int count) {
        if (budget.exhausted) return;
        if (static_cast<int>(cur_arcs.size()) > max_len) return;
        const auto& nd = cg.w.nodes[static_cast<size_t>(node)];
        if (nd.kind == NodeKind::sink) {
            int j = nd.line;
            if (j < anchor) return;
            int back = cg.back_arcs[static_cast<size_t>(j)];
            if (used[static_cast<size_t>(back)]) return;
            if (static_cast<int>(cur_arcs.size()) + 1 > max_len) return;
            cur_arcs.push_back(back);
            if (j == anchor) {
                Cycle c;
                c.arcs = cur_arcs;
                for (int a : cur_arcs) used[static_cast<size_t>(a)] = 1;
                cur_cycles.push_back(c);
                choose(anchor + 1, static_cast<int>(cur_cycles.size()));
                cur_cycles.pop_back();
                for (int a : cur_arcs) used[static_cast<size_t>(a)] = 0;
            } else {
                int src = cg.w.source[static_cast<size_t>(j)];
                if (!visited[static_cast<size_t>(src)]) {
                    visited[static_cast<size_t>(src)] = 1;
                    walk(anchor, src, count);
                    visited[static_cast<size_t>(src)] = 0;
                }
            }
            cur_arcs.pop_back();
            return;
        }
        for (int a : cg.w.out_arcs[static_cast<size_t>(node)]) {
            if (used[static_cast<size_t>(a)] || is_back(a)) continue;
            int to = cg.w.arcs[static_cast<size_t>(a)].to;
            if (cg.w.nodes[static_cast<size_t>(to)].kind != NodeKind::sink &&
                visited[static_cast<size_t>(to)])
                continue;
            if (!budget.tick()) return;
            cur_arcs.push_back(a);
            if (cg.w.nodes[static_cast<size_t>(to)].kind != NodeKind::sink)
                visited[static_cast<size_t>(to)] = 1;
            walk(anchor, to, count);
            if (cg.w.nodes[static_cast<size_t>(to)].kind != NodeKind::sink)
                visited[static_cast<size_t>(to)] = 0;
            cur_arcs.pop_back();
        }
    }

    void choose(int anchor, int count) {
        if (count > best) {
            best = count;
            best_cycles = cur_cycles;
        }
        if (anchor > cg.w.n) return;
        if (count + (cg.w.n - anchor + 1) <= best) return;
        // Route a cycle whose minimal back arc is this anchor. The walk for
        // a nested cycle reuses the visited marks, so save and restore them.
        std::vector<int> saved = std::move(cur_arcs);
        std::vector<char> saved_visited = visited;
        cur_arcs.clear();
        std::fill(visited.begin(), visited.end(), 0);
        int src = cg.w.source[static_cast<size_t>(anchor)];
        visited[static_cast<size_t>(src)] = 1;
        walk(anchor, src, count);
        cur_arcs = std::move(saved);
        visited = std::move(saved_visited);
        choose(anchor + 1, count);
    }
};

}  // namespace

CycleOracleResult cycle_packing_exact(const CycleGadget& cg, int max_len, SearchBudget& budget) {
    CycleSearch search(cg, max_len, budget);
    search.choose(1, 0);
    CycleOracleResult res;
    res.lower = std::max(search.best, 0);
    res.witness = std::move(search.best_cycles);
    res.exact = !budget.exhausted;
    res.upper = res.exact ? res.lower : cg.w.n;
    return res;
}

CnfOracleResult min_consistent_cnf(const CnfInstance& inst, SearchBudget& budget) {
    const int v = inst.base.var_count;
    if (v > 20) throw std::invalid_argument("clause enumeration supports at most 20 variables");
    if (inst.samples.negatives().size() > 64)
        throw std::invalid_argument("clause cover supports at most 64 negative samples");

    CnfOracleResult res;
    if (inst.samples.negatives().empty()) {
        CnfFormula f;
        f.var_count = v;
        std::vector<int> all(static_cast<size_t>(v));
        std::iota(all.begin(), all.end(), 1);
        f.clauses.push_back(std::move(all));
        res.exact = true;
        res.lower = res.upper = 0;
        res.formula = std::move(f);
        return res;
    }

    auto as_mask = [&](const BitString& b) {
        uint32_t m = 0;
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i]) m |= uint32_t{1} << i;
        return m;
    };
    std::vector<uint32_t> pos_masks, neg_masks;
    for (const auto& b : inst.samples.positives()) pos_masks.push_back(as_mask(b));
    for (const auto& b : inst.samples.negatives()) neg_masks.push_back(as_mask(b));

    // Candidate clauses = variable subsets every positive intersects; a
    // clause covers the negatives it has no variable in common with.
    struct Candidate {
        uint32_t vars;
        uint64_t cover;
    };
    std::vector<Candidate> cands;
    for (uint32_t c = 0; c < (uint32_t{1} << v); ++c) {
        if (!budget.tick()) break;
        bool ok = true;
        for (uint32_t p : pos_masks)
            if ((c & p) == 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        uint64_t cover = 0;
        for (size_t j = 0; j < neg_masks.size(); ++j)
            if ((c & neg_masks[j]) == 0) cover |= uint64_t{1} << j;
        if (cover) cands.push_back({c, cover});
    }
    std::map<uint64_t, uint32_t> by_cover;
    for (const auto& cand : cands)
        if (auto [it, fresh] = by_cover.try_emplace(cand.cover, cand.vars); !fresh)
            it->second = std::min(it->second, cand.vars);
    cands.clear();
    for (auto [cover, vars] : by_cover) cands.push_back({vars, cover});

    const uint64_t all_neg =
        neg_masks.size() == 64 ? ~uint64_t{0} : (uint64_t{1} << neg_masks.size()) - 1;
    std::vector<uint32_t> best_pick, cur_pick;
    bool cut = false;

    auto dfs = [&](auto&& self, uint64_t covered) -> void {
        if (!best_pick.empty() && cur_pick.size() + 1 > best_pick.size()) return;
        if (!budget.tick()) {
            cut = true;
            return;
        }
        if (covered == all_neg) {
            if (best_pick.empty() || cur_pick.size() < best_pick.size()) best_pick = cur_pick;
            return;
        }
        if (!best_pick.empty() && cur_pick.size() + 1 >= best_pick.size()) return;
        uint64_t missing = all_neg & ~covered;
        int target = std::countr_zero(missing);
        for (const auto& cand : cands) {
            if (!(cand.cover >> target & 1)) continue;
            cur_pick.push_back(cand.vars);
            self(self, covered | cand.cover);
            cur_pick.pop_back();
            if (cut) return;
        }
    };
    dfs(dfs, 0);

    if (best_pick.empty()) {
        // Either the instance is infeasible for clause sets of this form or
        // the budget ran out before any cover was found.
        res.exact = false;
        res.lower = cut ? 1 : static_cast<int>(neg_masks.size()) + 1;
        res.upper = static_cast<int>(neg_masks.size()) + 1;
        return res;
    }
    CnfFormula f;
    f.var_count = v;
    std::sort(best_pick.begin(), best_pick.end());
    for (uint32_t vars : best_pick) {
        std::vector<int> clause;
        for (int i = 0; i < v; ++i)
            if (vars >> i & 1) clause.push_back(i + 1);
        f.clauses.push_back(std::move(clause));
    }
    res.exact = !cut;
    res.lower = res.exact ? static_cast<int>(best_pick.size()) : 1;
    res.upper = static_cast<int>(best_pick.size());
    res.formula = std::move(f);
    return res;
}

}  // namespace gpr
