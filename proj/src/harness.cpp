#include "gpr/harness.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gpr/cnf.hpp"
#include "gpr/edp.hpp"
#include "json.hpp"

namespace gpr {

const char* check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

int SuiteReport::count(CheckStatus s) const {
    int c = 0;
    for (const auto& check : checks)
        if (check.status == s) ++c;
    return c;
}

ProjectionProfile edp_profile() { return {ProfileKind::alpha, 1, 2, 1, 2}; }
ProjectionProfile fa_profile() { return {ProfileKind::chi, 1, 2, 1, 2}; }

ReductionAdapter edp_adapter() {
    ReductionAdapter a;
    a.name = "edp";
    a.opt = [](const Graph& g, SearchBudget& budget) {
        SwitchingGraph w = build_switching_graph(g);
        EdpOracleResult r = edp_exact(w, budget, true);
        return OracleValue{r.exact, static_cast<double>(r.lower), static_cast<double>(r.upper)};
    };
    a.instance_size = [](const Graph& g) {
        return static_cast<double>(build_switching_graph(g).nodes.size());
    };
    return a;
}

ReductionAdapter fa_adapter() {
    ReductionAdapter a;
    a.name = "fa";
    a.opt = [](const Graph& g, SearchBudget& budget) {
        DfaOracleResult r = min_consistent_dfa(reduce_quadratic(g), budget);
        return OracleValue{r.exact, static_cast<double>(r.lower), static_cast<double>(r.upper)};
    };
    a.instance_size = [](const Graph& g) {
        return static_cast<double>(reduce_quadratic(g).total_bits());
    };
    return a;
}

namespace {

double graph_value(ProfileKind kind, const Graph& g) {
    return kind == ProfileKind::alpha ? alpha_exact(g) : chi_exact(g);
}

// opt >= bound with bracket semantics.
CheckStatus at_least(const OracleValue& v, double bound) {
    if (v.lower >= bound) return CheckStatus::pass;
    if (v.exact) return CheckStatus::fail;
    return CheckStatus::inconclusive;
}

// opt <= bound with bracket semantics.
CheckStatus at_most(const OracleValue& v, double bound) {
    if (v.upper <= bound) return CheckStatus::pass;
    if (v.exact) return CheckStatus::fail;
    return CheckStatus::inconclusive;
}

std::string bracket_string(const OracleValue& v) {
    std::ostringstream ss;
    if (v.exact)
        ss << v.lower;
    else
        ss << "[" << v.lower << "," << v.upper << "]";
    return ss.str();
}

}  // namespace

std::vector<CheckResult> check_projection(const ProjectionProfile& profile,
                                          const ReductionAdapter& adapter, const Graph& g,
                                          const Graph& h, SearchBudget& budget) {
    std::vector<CheckResult> out;
    Graph gh = lex_product(g, h);
    OracleValue vg = adapter.opt(g, budget);
    OracleValue vh = adapter.opt(h, budget);
    OracleValue vgh = adapter.opt(gh, budget);

    auto add = [&](const std::string& name, CheckStatus st, const std::string& detail) {
        out.push_back({name, st, detail});
    };

    struct Side {
        const char* tag;
        const Graph* graph;
        const OracleValue* value;
    };
    const Side sides[] = {{"g", &g, &vg}, {"h", &h, &vh}, {"gh", &gh, &vgh}};
    for (const auto& side : sides) {
        double val = graph_value(profile.kind, *side.graph);
        std::ostringstream d;
        d << "opt=" << bracket_string(*side.value) << " value=" << val;
        add(std::string("I/") + side.tag, at_least(*side.value, val), d.str());
    }

    double c = std::pow(static_cast<double>(g.vertex_count()), profile.c1);
    double coeff = std::pow(graph_value(profile.kind, g), profile.c2);
    CheckStatus st2;
    if (vgh.upper <= c + coeff * vh.lower)
        st2 = CheckStatus::pass;
    else if (vgh.exact && vh.exact)
        st2 = CheckStatus::fail;
    else
        st2 = CheckStatus::inconclusive;
    {
        std::ostringstream d;
        d << "opt(gh)=" << bracket_string(vgh) << " bound=" << c << "+" << coeff << "*"
          << bracket_string(vh);
        add("II", st2, d.str());
    }

    for (const auto& side : sides) {
        double size = adapter.instance_size(*side.graph);
        std::ostringstream d;
        d << "opt=" << bracket_string(*side.value) << " c0*size=" << profile.c0 * size;
        add(std::string("III/") + side.tag, at_most(*side.value, profile.c0 * size), d.str());
    }
    return out;
}

std::vector<CheckResult> check_induction_bound(const ProjectionProfile& profile,
                                               const ReductionAdapter& adapter, const Graph& g,
                                               int l_max, SearchBudget& budget) {
    if (l_max < 1) throw std::invalid_argument("induction bound needs l >= 1");
    std::vector<CheckResult> out;
    double val = graph_value(profile.kind, g);
    for (int l = 1; l <= l_max; ++l) {
        Graph gl = k_fold_power(g, l);
        OracleValue v = adapter.opt(gl, budget);
        double bound = l * profile.c0 *
                       std::pow(static_cast<double>(g.vertex_count()), profile.c1 + profile.d + 1) *
                       std::pow(val, 2 * profile.c2 * l);
        std::ostringstream d;
        d << "opt=" << bracket_string(v) << " bound=" << bound;
        out.push_back({"l" + std::to_string(l), at_most(v, bound), d.str()});
        if (l == 1) {
            // Base case cross-check: the l=1 bound follows from opt <= c0*|R[g]|.
            double size_bound = profile.c0 * adapter.instance_size(g);
            std::ostringstream d2;
            d2 << "opt=" << bracket_string(v) << " c0*size=" << size_bound;
            out.push_back({"l1-base", at_most(v, size_bound), d2.str()});
        }
    }
    return out;
}

OccamParams occam_params_for(double big_n, double k, double alpha, MachineClass cls) {
    double target = cls == MachineClass::dfa ? 1.0 : 0.5;
    double epsilon = (target - alpha) / (2 * k + 1);
    OccamParams p;
    p.k = k;
    p.alpha = alpha;
    p.s = big_n;
    p.m = std::log2(big_n);
    p.n = std::pow(big_n, epsilon);
    return p;
}

OccamReport occam_gap(const OccamParams& params, MachineClass cls) {
    OccamReport r;
    const double target = cls == MachineClass::dfa ? 1.0 : 0.5;
    if (params.k < 0 || params.alpha < 0 ||
        (cls == MachineClass::dfa ? params.alpha >= 1 : params.alpha > 0.5)) {
        r.valid = false;
        r.detail = "alpha out of range for the machine class";
        return r;
    }
    r.valid = true;
    r.epsilon = (target - params.alpha) / (2 * params.k + 1);
    r.degenerate = r.epsilon <= 0;
    r.exponent_ok =
        std::abs(params.alpha + (2 * params.k + 1) * r.epsilon - target) <= 1e-12;
    r.yes_bound = std::pow(params.n, params.k) * std::pow(params.m, params.k) *
                  std::pow(params.s, params.alpha);
    r.no_bound = std::pow(params.s, target - r.epsilon);
    // Exponents match exactly at k = 0, so allow equality there.
    r.gap_ok = r.degenerate || r.yes_bound <= r.no_bound * (1 + 1e-12);
    std::ostringstream d;
    d << "epsilon=" << r.epsilon << " yes=" << r.yes_bound << " no=" << r.no_bound
      << (r.degenerate ? " (degenerate)" : "");
    r.detail = d.str();
    return r;
}

SandwichResult verify_fa_sandwich(const Graph& g, int k, SearchBudget& budget) {
    SandwichResult r;
    SampleSet samples = reduce_tight(g, k);
    std::vector<int> coloring = optimal_coloring(g);
    TightAdfaResult built = build_tight_adfa(g, coloring, k);
    r.built_size = built.size;
    r.built_bound = built.size_bound;
    r.construction_ok = is_acyclic(built.machine.dfa) && built.machine.layering_holds() &&
                        static_cast<bool>(is_consistent(built.machine.dfa, samples)) &&
                        built.size <= built.size_bound;

    r.oracle = min_consistent_dfa(samples, budget);
    std::ostringstream d;
    if (!r.oracle.exact) {
        r.oracle_status = CheckStatus::inconclusive;
        d << "oracle in [" << r.oracle.lower << "," << r.oracle.upper << "]";
    } else {
        EncodingContext ctx = EncodingContext::for_graph(g);
        Graph padded = pad_with_isolated(g, ctx.padded_n);
        r.chi_power = chi_exact(k_fold_power(padded, k));
        bool witness_ok =
            r.oracle.machine && static_cast<bool>(is_consistent(*r.oracle.machine, samples));
        bool sandwich = r.chi_power <= r.oracle.lower && r.oracle.lower <= r.built_size;
        r.oracle_status = (witness_ok && sandwich) ? CheckStatus::pass : CheckStatus::fail;
        d << "chi^k=" << r.chi_power << " oracle=" << r.oracle.lower << " built=" << r.built_size;
    }
    r.detail = d.str();
    return r;
}

EdpProductBoundResult verify_edp_product_bound(const Graph& g, const Graph& h,
                                               SearchBudget& budget) {
    EdpProductBoundResult r;
    SwitchingGraph wp = build_switching_graph_product(g, h);
    r.product = edp_exact(wp, budget, true);
    SwitchingGraph wh = build_switching_graph(h);
    r.factor_h = edp_exact(wh, budget, true);
    double v = g.vertex_count();
    r.rhs = 3 * v * v + alpha_exact(g) * r.factor_h.lower;
    if (r.product.upper <= r.rhs)
        r.status = CheckStatus::pass;
    else if (r.product.exact && r.factor_h.exact)
        r.status = CheckStatus::fail;
    else
        r.status = CheckStatus::inconclusive;
    std::ostringstream d;
    d << "lhs<=" << r.product.upper << " rhs=" << r.rhs;
    r.detail = d.str();
    return r;
}

namespace {

SearchBudget make_budget(const SuiteOptions& o) {
    SearchBudget b;
    b.max_nodes = o.budget_nodes;
    b.max_seconds = o.budget_seconds;
    return b;
}

std::string graph_label(size_t idx) { return "G" + std::to_string(idx); }

std::string graph_detail(const Graph& g) {
    std::ostringstream ss;
    ss << "n=" << g.vertex_count() << " m=" << g.edge_count();
    return ss.str();
}

CheckStatus status_of(bool ok) { return ok ? CheckStatus::pass : CheckStatus::fail; }

void suite_product_identities(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    rep.checks.push_back({"corpus", CheckStatus::pass,
                          "pairs=" + std::to_string(gs.size() * gs.size()) +
                              " random=" + std::to_string(opt.random_pairs) +
                              " seed=" + std::to_string(opt.seed)});
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = 0; j < gs.size(); ++j) {
            bool exact = gs[i].vertex_count() * gs[j].vertex_count() <= 12;
            ProductIdentityReport r = verify_product_identities(gs[i], gs[j], exact);
            std::ostringstream d;
            d << "alpha " << r.alpha_g << "*" << r.alpha_h << "->" << r.alpha_gh << " chi "
              << r.chi_g << "*" << r.chi_h << "->" << r.chi_gh;
            rep.checks.push_back({"pair/" + graph_label(i) + "x" + graph_label(j),
                                  status_of(r.ok()), d.str()});
        }
    std::mt19937_64 rng(opt.seed);
    for (int t = 0; t < opt.random_pairs; ++t) {
        int n1 = 6 + static_cast<int>(rng() % 2);
        int n2 = 6 + static_cast<int>(rng() % 2);
        Graph g = random_graph(n1, 0.5, rng);
        Graph h = random_graph(n2, 0.5, rng);
        ProductIdentityReport r = verify_product_identities(g, h, false);
        std::ostringstream d;
        d << "n=" << n1 << "x" << n2 << " alpha " << r.alpha_g << "*" << r.alpha_h << "->"
          << r.alpha_gh << " chi<=" << r.chi_gh;
        rep.checks.push_back({"random/" + std::to_string(t), status_of(r.ok()), d.str()});
    }
}

void suite_fa_constructions(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        if (g.vertex_count() < 2 || g.vertex_count() > 4) continue;
        SearchBudget budget = make_budget(opt);
        DfaOracleResult res = min_consistent_dfa(reduce_quadratic(g), budget);
        int chi = chi_exact(g);
        CheckResult c;
        c.name = "mindfa-chi/" + graph_label(i);
        if (!res.exact) {
            c.status = CheckStatus::inconclusive;
            c.detail = graph_detail(g) + " oracle in [" + std::to_string(res.lower) + "," +
                       std::to_string(res.upper) + "]";
        } else {
            bool witness_ok =
                res.machine && static_cast<bool>(is_consistent(*res.machine, reduce_quadratic(g)));
            c.status = status_of(witness_ok && res.lower >= chi);
            c.detail = graph_detail(g) + " mindfa=" + std::to_string(res.lower) +
                       " chi=" + std::to_string(chi);
        }
        rep.checks.push_back(std::move(c));
    }
    for (size_t i = 0; i < gs.size(); ++i) {
        if (gs[i].vertex_count() < 2 || gs[i].vertex_count() > 4) continue;
        for (size_t j = 0; j < gs.size(); ++j) {
            if (gs[j].vertex_count() < 2 || gs[j].vertex_count() > 4) continue;
            const Graph& g = gs[i];
            const Graph& h = gs[j];
            ProductDfaResult pr = build_product_dfa(g, optimal_coloring(g), build_base_dfa(h));
            EncodingContext cg = EncodingContext::for_graph(g);
            EncodingContext ch = EncodingContext::for_graph(h);
            Graph target = lex_product(pad_with_isolated(g, cg.padded_n),
                                       pad_with_isolated(h, ch.padded_n));
            bool consistent =
                static_cast<bool>(is_consistent(pr.machine.dfa, reduce_quadratic(target)));
            bool size_ok = pr.size <= pr.size_bound;
            std::ostringstream d;
            d << "size=" << pr.size << " bound=" << pr.size_bound << " copies=" << pr.copies
              << " realized_c=" << pr.realized_c;
            rep.checks.push_back({"product-dfa/" + graph_label(i) + "x" + graph_label(j),
                                  status_of(consistent && size_ok), d.str()});
        }
    }
}

void suite_fa_sandwich(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        if (g.vertex_count() < 2) continue;
        for (int k = 1; k <= 2; ++k) {
            SearchBudget budget = make_budget(opt);
            SandwichResult r = verify_fa_sandwich(g, k, budget);
            std::string tag = graph_label(i) + "-k" + std::to_string(k);
            rep.checks.push_back({"build/" + tag, status_of(r.construction_ok),
                                  graph_detail(g) + " size=" + std::to_string(r.built_size) +
                                      " bound=" + std::to_string(r.built_bound)});
            rep.checks.push_back({"oracle/" + tag, r.oracle_status, r.detail});
        }
    }
}

void suite_edp(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        if (g.vertex_count() > 4) continue;
        SwitchingGraph w = build_switching_graph(g);
        int alpha = alpha_exact(g);
        CheckResult wc;
        wc.name = "witness/" + graph_label(i);
        try {
            PathSet ps = canonical_witness(w, max_independent_set(g));
            bool ok = static_cast<int>(ps.paths.size()) == alpha && arc_disjoint(w, ps);
            for (const auto& p : ps.paths) ok = ok && path_valid(w, p);
            wc.status = status_of(ok);
            wc.detail = graph_detail(g) + " paths=" + std::to_string(ps.paths.size()) +
                        " alpha=" + std::to_string(alpha);
        } catch (const std::exception& e) {
            wc.status = CheckStatus::fail;
            wc.detail = e.what();
        }
        rep.checks.push_back(std::move(wc));

        SearchBudget budget = make_budget(opt);
        EdpOracleResult res = edp_exact(w, budget, false);
        CheckStatus st = res.lower >= alpha
                             ? CheckStatus::pass
                             : (res.exact ? CheckStatus::fail : CheckStatus::inconclusive);
        rep.checks.push_back({"edp-oracle/" + graph_label(i), st,
                              "edp=" + std::to_string(res.lower) + (res.exact ? "" : "+") +
                                  " alpha=" + std::to_string(alpha)});
    }

    for (int n : {6, 9, 12}) {
        Graph g = bad_example_graph(n);
        SwitchingGraph w = build_switching_graph(g);
        auto ps = bad_example_witness(w);
        bool ok = alpha_exact(g) == 2 && ps.has_value() &&
                  static_cast<int>(ps->paths.size()) == n / 3 && arc_disjoint(w, *ps);
        if (ok)
            for (const auto& p : ps->paths) ok = ok && path_valid(w, p);
        rep.checks.push_back({"separation/n" + std::to_string(n), status_of(ok),
                              "alpha=2 paths=" +
                                  std::to_string(ps ? ps->paths.size() : size_t{0})});
    }

    auto factors = nonisomorphic_graphs_up_to(3);
    for (size_t i = 0; i < factors.size(); ++i)
        for (size_t j = 0; j < factors.size(); ++j) {
            const Graph& g = factors[i];
            const Graph& h = factors[j];
            SearchBudget budget = make_budget(opt);
            EdpProductBoundResult r = verify_edp_product_bound(g, h, budget);
            std::string tag = graph_label(i) + "x" + graph_label(j);
            rep.checks.push_back({"product-bound/" + tag, r.status, r.detail});

            SwitchingGraph wp = build_switching_graph_product(g, h);
            ReversalTrace trace = reversal_trace(wp, r.product.witness, true);
            std::ostringstream d;
            d << "paths=" << trace.traced << " max_drop=" << trace.max_drop;
            rep.checks.push_back({"reversal/" + tag, status_of(trace.max_drop <= 3), d.str()});
        }
}

// All simple cycles with at most max_back back arcs, capped at limit.
std::vector<Cycle> enumerate_cycles(const CycleGadget& cg, int max_back, size_t limit,
                                    SearchBudget& budget) {
    std::vector<Cycle> out;
    const SwitchingGraph& w = cg.w;
    std::vector<char> visited(w.nodes.size(), 0);
    std::vector<int> arcs;
    std::set<int> back(cg.back_arcs.begin() + 1, cg.back_arcs.end());

    auto walk = [&](auto&& self, int anchor, int node, int backs) -> void {
        if (out.size() >= limit || budget.exhausted) return;
        const auto& nd = w.nodes[static_cast<size_t>(node)];
        if (nd.kind == NodeKind::sink) {
            int j = nd.line;
            if (j < anchor) return;
            int back_arc = cg.back_arcs[static_cast<size_t>(j)];
            arcs.push_back(back_arc);
            if (j == anchor) {
                Cycle c;
                c.arcs = arcs;
                out.push_back(std::move(c));
            } else if (backs + 1 <= max_back) {
                int src = w.source[static_cast<size_t>(j)];
                if (!visited[static_cast<size_t>(src)]) {
                    visited[static_cast<size_t>(src)] = 1;
                    self(self, anchor, src, backs + 1);
                    visited[static_cast<size_t>(src)] = 0;
                }
            }
            arcs.pop_back();
            return;
        }
        for (int a : w.out_arcs[static_cast<size_t>(node)]) {
            if (back.count(a)) continue;
            int to = w.arcs[static_cast<size_t>(a)].to;
            bool to_sink = w.nodes[static_cast<size_t>(to)].kind == NodeKind::sink;
            if (!to_sink && visited[static_cast<size_t>(to)]) continue;
            if (!budget.tick()) return;
            arcs.push_back(a);
            if (!to_sink) visited[static_cast<size_t>(to)] = 1;
            self(self, anchor, to, backs);
            if (!to_sink) visited[static_cast<size_t>(to)] = 0;
            arcs.pop_back();
        }
    };
    for (int a = 1; a <= w.n && out.size() < limit; ++a) {
        std::fill(visited.begin(), visited.end(), 0);
        int src = w.source[static_cast<size_t>(a)];
        visited[static_cast<size_t>(src)] = 1;
        arcs.clear();
        walk(walk, a, src, 1);
    }
    return out;
}

void suite_cycles(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        if (g.vertex_count() > 4) continue;
        const int n = g.vertex_count();
        CycleGadget cg = build_cycle_gadget(g);
        SwitchingGraph w = build_switching_graph(g);

        SearchBudget b1 = make_budget(opt);
        CycleOracleResult pack = cycle_packing_exact(cg, cg.k_threshold, b1);
        SearchBudget b2 = make_budget(opt);
        EdpOracleResult edp = edp_exact(w, b2, false);
        CheckResult eq;
        eq.name = "equality/" + graph_label(i);
        if (pack.exact && edp.exact) {
            bool witness_ok = true;
            std::set<int> used;
            for (const auto& c : pack.witness) {
                witness_ok = witness_ok && cycle_valid(cg, c) &&
                             cycle_vertex_length(c) <= cg.k_threshold;
                for (int a : c.arcs) witness_ok = witness_ok && used.insert(a).second;
            }
            eq.status = status_of(witness_ok && pack.lower == edp.lower);
            eq.detail = graph_detail(g) + " edc=" + std::to_string(pack.lower) +
                        " edp=" + std::to_string(edp.lower);
        } else {
            eq.status = CheckStatus::inconclusive;
            eq.detail = "budget exhausted";
        }
        rep.checks.push_back(std::move(eq));

        bool canon_ok = true;
        for (int line = 1; line <= n; ++line) {
            Cycle c;
            c.arcs = canonical_path(cg.w, line).arcs;
            c.arcs.push_back(cg.back_arcs[static_cast<size_t>(line)]);
            canon_ok = canon_ok && cycle_valid(cg, c) && cycle_vertex_length(c) == 2 * n + 2 &&
                       cycle_back_arc_count(cg, c) == 1;
        }
        rep.checks.push_back({"canonical/" + graph_label(i), status_of(canon_ok),
                              "length=" + std::to_string(2 * n + 2)});

        SearchBudget b3 = make_budget(opt);
        auto cycles = enumerate_cycles(cg, 3, 500, b3);
        bool lengths_ok = true;
        int multi = 0;
        for (const auto& c : cycles) {
            int backs = cycle_back_arc_count(cg, c);
            if (backs > 1) ++multi;
            lengths_ok = lengths_ok && cycle_valid(cg, c) &&
                         cycle_vertex_length(c) == 2 * backs * (n + 1);
        }
        rep.checks.push_back({"lengths/" + graph_label(i), status_of(lengths_ok),
                              "cycles=" + std::to_string(cycles.size()) +
                                  " multi-back=" + std::to_string(multi)});
    }
}

void suite_cnf(SuiteReport& rep, const SuiteOptions& opt) {
    auto gs = nonisomorphic_graphs_up_to(5);
    for (size_t i = 0; i < gs.size(); ++i) {
        const Graph& g = gs[i];
        if (g.vertex_count() > 4) continue;
        int chi = chi_exact(g);

        CnfInstance inst = reduce_cnf(g, 1);
        SearchBudget budget = make_budget(opt);
        CnfOracleResult res = min_consistent_cnf(inst, budget);
        CheckResult c;
        c.name = "mincnf/" + graph_label(i);
        if (!res.exact) {
            c.status = CheckStatus::inconclusive;
            c.detail = "budget exhausted";
        } else {
            bool ok = res.lower == chi && res.formula &&
                      cnf_consistent(*res.formula, inst.samples);
            if (ok && !res.formula->clauses.empty()) {
                try {
                    std::vector<int> coloring = extract_coloring_from_cnf(g, *res.formula);
                    ok = is_proper_coloring(g, coloring) && color_count(coloring) <= res.lower;
                } catch (const std::exception&) {
                    ok = false;
                }
            }
            c.status = status_of(ok);
            c.detail = graph_detail(g) + " clauses=" + std::to_string(res.lower) +
                       " chi=" + std::to_string(chi);
        }
        rep.checks.push_back(std::move(c));

        CnfFormula f2 = build_cnf_from_coloring(g, 2, optimal_coloring(g));
        CnfInstance inst2 = reduce_cnf(g, 2);
        bool ok2 = cnf_consistent(f2, inst2.samples) && f2.clause_count() <= chi * chi;
        rep.checks.push_back({"build-k2/" + graph_label(i), status_of(ok2),
                              "clauses=" + std::to_string(f2.clause_count()) +
                                  " chi^2=" + std::to_string(chi * chi)});
    }
}

void suite_meta(SuiteReport& rep, const SuiteOptions& opt) {
    struct Named {
        const char* name;
        Graph g;
    };
    const Named corpus[] = {
        {"edgeless-2", edgeless_graph(2)}, {"K2", complete_graph(2)}, {"P3", path_graph(3)}};
    struct AdapterEntry {
        ReductionAdapter adapter;
        ProjectionProfile profile;
    };
    const AdapterEntry adapters[] = {{edp_adapter(), edp_profile()}, {fa_adapter(), fa_profile()}};

    for (const auto& entry : adapters) {
        for (const auto& named : corpus) {
            SearchBudget budget = make_budget(opt);
            auto results = check_induction_bound(entry.profile, entry.adapter, named.g, 2, budget);
            for (auto& r : results)
                rep.checks.push_back({"induction/" + entry.adapter.name + "/" + named.name + "/" +
                                          r.name,
                                      r.status, r.detail});
            SearchBudget budget2 = make_budget(opt);
            auto proj = check_projection(entry.profile, entry.adapter, named.g, named.g, budget2);
            for (auto& r : proj)
                rep.checks.push_back({"projection/" + entry.adapter.name + "/" + named.name + "/" +
                                          r.name,
                                      r.status, r.detail});
        }
    }

    struct OccamCase {
        const char* name;
        double k, alpha, big_n;
        MachineClass cls;
        double expect_eps;
    };
    const OccamCase cases[] = {{"dfa-k1", 1, 0.5, 1 << 30, MachineClass::dfa, 1.0 / 6},
                               {"dfa-k0", 0, 0, 1 << 30, MachineClass::dfa, 1.0},
                               {"nfa-k2", 2, 0.5, 1 << 30, MachineClass::nfa, 0.0}};
    for (const auto& cs : cases) {
        OccamParams p = occam_params_for(cs.big_n, cs.k, cs.alpha, cs.cls);
        OccamReport r = occam_gap(p, cs.cls);
        bool ok = r.valid && r.exponent_ok && r.gap_ok &&
                  std::abs(r.epsilon - cs.expect_eps) <= 1e-12;
        rep.checks.push_back({std::string("occam/") + cs.name, status_of(ok), r.detail});
    }
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"product-identities", "fa-sandwich", "fa-constructions", "edp",
            "cycles",             "cnf",         "meta"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    SuiteReport rep;
    rep.suite = name;
    if (name == "product-identities")
        suite_product_identities(rep, options);
    else if (name == "fa-sandwich")
        suite_fa_sandwich(rep, options);
    else if (name == "fa-constructions")
        suite_fa_constructions(rep, options);
    else if (name == "edp")
        suite_edp(rep, options);
    else if (name == "cycles")
        suite_cycles(rep, options);
    else if (name == "cnf")
        suite_cnf(rep, options);
    else if (name == "meta")
        suite_meta(rep, options);
    else
        throw std::invalid_argument("unknown suite: " + name);
    return rep;
}

void render_report(std::ostream& out, const SuiteReport& report) {
    out << "suite " << report.suite << "\n";
    for (const auto& c : report.checks)
        out << check_status_name(c.status) << "\t" << c.name << "\t" << c.detail << "\n";
    out << "summary pass=" << report.count(CheckStatus::pass)
        << " fail=" << report.count(CheckStatus::fail)
        << " inconclusive=" << report.count(CheckStatus::inconclusive) << "\n";
}

std::string render_report_json(const SuiteReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["summary"] = {{"pass", report.count(CheckStatus::pass)},
                    {"fail", report.count(CheckStatus::fail)},
                    {"inconclusive", report.count(CheckStatus::inconclusive)}};
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks)
        j["checks"].push_back({{"name", c.name},
                               {"status", check_status_name(c.status)},
                               {"detail", c.detail}});
    return j.dump(2) + "\n";
}

}  // namespace gpr
