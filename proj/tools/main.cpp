#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gpr/cnf.hpp"
#include "gpr/edp.hpp"
#include "gpr/fa_reduction.hpp"
#include "gpr/graph.hpp"
#include "gpr/harness.hpp"
#include "gpr/oracles.hpp"

namespace {

struct CommonOpts {
    long long budget_nodes = 20'000'000;
    double budget_seconds = 0;
    uint64_t seed = 1;
    std::string out;
};

std::ostream& output(const CommonOpts& common, std::ofstream& file) {
    if (common.out.empty()) return std::cout;
    file.open(common.out);
    if (!file) throw CLI::RuntimeError("cannot open output file: " + common.out, 1);
    return file;
}

gpr::Graph load_graph(const std::string& path) {
    if (path == "-") return gpr::read_graph(std::cin);
    return gpr::read_graph_file(path);
}

gpr::SearchBudget make_budget(const CommonOpts& common) {
    gpr::SearchBudget b;
    b.max_nodes = common.budget_nodes;
    b.max_seconds = common.budget_seconds;
    return b;
}

void add_common(CLI::App* cmd, CommonOpts& common) {
    cmd->add_option("--budget-nodes", common.budget_nodes, "search node budget");
    cmd->add_option("--budget-seconds", common.budget_seconds,
                    "optional wall clock budget, 0 = off");
    cmd->add_option("--seed", common.seed, "random seed");
    cmd->add_option("--out", common.out, "output file, default stdout");
}

void print_oracle_header(std::ostream& out, bool exact, int lower, int upper, long long nodes) {
    out << "exact " << (exact ? 1 : 0) << "\n";
    out << "lower " << lower << "\n";
    out << "upper " << upper << "\n";
    out << "nodes " << nodes << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph product reduction toolkit"};
    app.require_subcommand(1);
    CommonOpts common;

    std::string graph_path, graph_path2, corpus;
    int k = 1, count = 0;
    double occam_k = 1, occam_alpha = 0.5, occam_n = 1 << 20;
    std::string machine_class = "dfa";

    auto* gen = app.add_subcommand("gen", "construct product graphs");
    gen->require_subcommand(1);
    auto* gen_product = gen->add_subcommand("product", "lexicographic product of two graphs");
    gen_product->add_option("first", graph_path, "first factor file")->required();
    gen_product->add_option("second", graph_path2, "second factor file")->required();
    add_common(gen_product, common);
    auto* gen_power = gen->add_subcommand("power", "k-fold lexicographic power");
    gen_power->add_option("graph", graph_path, "graph file")->required();
    gen_power->add_option("-k", k, "power")->default_val(2);
    add_common(gen_power, common);

    auto* reduce = app.add_subcommand("reduce", "emit reduced instances");
    reduce->require_subcommand(1);
    const char* reduce_kinds[] = {"fa", "fa-tight", "edp", "cycles", "cnf"};
    for (const char* kind : reduce_kinds) {
        auto* sub = reduce->add_subcommand(kind);
        sub->add_option("graph", graph_path, "graph file")->required();
        if (std::string(kind) == "fa-tight" || std::string(kind) == "cnf")
            sub->add_option("-k", k, "tuple arity")->default_val(1);
        add_common(sub, common);
    }

    auto* oracle = app.add_subcommand("oracle", "run exact search oracles");
    oracle->require_subcommand(1);
    const char* oracle_kinds[] = {"mindfa", "minnfa", "edp", "cycles", "mincnf", "alpha", "chi"};
    for (const char* kind : oracle_kinds) {
        auto* sub = oracle->add_subcommand(kind);
        sub->add_option("graph", graph_path, "graph file")->required();
        if (std::string(kind) == "mincnf")
            sub->add_option("-k", k, "tuple arity")->default_val(1);
        if (std::string(kind) == "edp")
            sub->add_flag("--orderly", "order-respecting relaxed sinks");
        add_common(sub, common);
    }

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    bool json_output = false;
    verify->add_option("suite", suite, "suite name")->required();
    verify->add_option("--corpus", corpus, "reserved corpus override");
    verify->add_option("--random-pairs", count, "random pair count")->default_val(50);
    verify->add_flag("--json", json_output, "structured output");
    add_common(verify, common);

    auto* occam = app.add_subcommand("occam", "Occam gap arithmetic");
    occam->add_option("-k", occam_k, "hypothesis exponent k")->default_val(1.0);
    occam->add_option("--alpha", occam_alpha, "size exponent alpha")->default_val(0.5);
    occam->add_option("-N", occam_n, "sample count N")->default_val(double{1 << 20});
    occam->add_option("--class", machine_class, "dfa or nfa")->default_val("dfa");
    add_common(occam, common);

    auto* report = app.add_subcommand("report", "run every suite, structured output");
    report->add_option("--random-pairs", count, "random pair count")->default_val(50);
    report->add_flag("--json", json_output, "structured output");
    add_common(report, common);

    CLI11_PARSE(app, argc, argv);

    try {
        std::ofstream file;
        std::ostream& out = output(common, file);

        if (gen->parsed()) {
            if (gen_product->parsed())
                gpr::write_graph(out, gpr::lex_product(load_graph(graph_path),
                                                       load_graph(graph_path2)));
            else
                gpr::write_graph(out, gpr::k_fold_power(load_graph(graph_path), k));
            return 0;
        }

        if (reduce->parsed()) {
            gpr::Graph g = load_graph(graph_path);
            auto* sub = reduce->get_subcommands().front();
            const std::string kind = sub->get_name();
            if (kind == "fa")
                gpr::write_samples(out, gpr::reduce_quadratic(g));
            else if (kind == "fa-tight")
                gpr::write_samples(out, gpr::reduce_tight(g, k));
            else if (kind == "edp")
                gpr::write_gadget(out, gpr::build_switching_graph(g));
            else if (kind == "cycles")
                gpr::write_gadget(out, gpr::build_cycle_gadget(g));
            else {
                auto inst = gpr::reduce_cnf(g, k);
                out << "# variables " << inst.base.var_count << "\n";
                gpr::write_samples(out, inst.samples);
            }
            return 0;
        }

        if (oracle->parsed()) {
            gpr::Graph g = load_graph(graph_path);
            auto* sub = oracle->get_subcommands().front();
            const std::string kind = sub->get_name();
            gpr::SearchBudget budget = make_budget(common);
            if (kind == "alpha") {
                out << "alpha " << gpr::alpha_exact(g) << "\n";
            } else if (kind == "chi") {
                out << "chi " << gpr::chi_exact(g) << "\n";
            } else if (kind == "mindfa") {
                auto r = gpr::min_consistent_dfa(gpr::reduce_quadratic(g), budget);
                print_oracle_header(out, r.exact, r.lower, r.upper, budget.nodes);
                if (r.machine) gpr::write_machine(out, *r.machine);
            } else if (kind == "minnfa") {
                auto r = gpr::min_consistent_nfa(gpr::reduce_quadratic(g), budget);
                print_oracle_header(out, r.exact, r.lower, r.upper, budget.nodes);
                if (r.machine) gpr::write_machine(out, *r.machine);
            } else if (kind == "edp") {
                bool orderly = sub->count("--orderly") > 0;
                gpr::SwitchingGraph w = gpr::build_switching_graph(g);
                auto r = gpr::edp_exact(w, budget, orderly);
                print_oracle_header(out, r.exact, r.lower, r.upper, budget.nodes);
                for (const auto& p : r.witness.paths) {
                    out << "path " << gpr::path_source_line(w, p) << " "
                        << gpr::path_sink_line(w, p) << " arcs " << p.arcs.size() << "\n";
                }
            } else if (kind == "cycles") {
                gpr::CycleGadget cg = gpr::build_cycle_gadget(g);
                auto r = gpr::cycle_packing_exact(cg, cg.k_threshold, budget);
                print_oracle_header(out, r.exact, r.lower, r.upper, budget.nodes);
                for (const auto& c : r.witness)
                    out << "cycle length " << gpr::cycle_vertex_length(c) << " back "
                        << gpr::cycle_back_arc_count(cg, c) << "\n";
            } else {
                auto inst = gpr::reduce_cnf(g, k);
                auto r = gpr::min_consistent_cnf(inst, budget);
                print_oracle_header(out, r.exact, r.lower, r.upper, budget.nodes);
                if (r.formula) gpr::write_dimacs(out, *r.formula);
            }
            return 0;
        }

        if (verify->parsed() || report->parsed()) {
            gpr::SuiteOptions options;
            options.budget_nodes = common.budget_nodes;
            options.budget_seconds = common.budget_seconds;
            options.seed = common.seed;
            if (count > 0) options.random_pairs = count;
            bool all_ok = true;
            std::vector<std::string> names =
                verify->parsed() ? std::vector<std::string>{suite} : gpr::suite_names();
            for (const auto& name : names) {
                gpr::SuiteReport rep = gpr::run_suite(name, options);
                if (json_output)
                    out << gpr::render_report_json(rep);
                else
                    gpr::render_report(out, rep);
                all_ok = all_ok && rep.ok();
            }
            return all_ok ? 0 : 1;
        }

        if (occam->parsed()) {
            gpr::MachineClass cls =
                machine_class == "nfa" ? gpr::MachineClass::nfa : gpr::MachineClass::dfa;
            gpr::OccamParams p = gpr::occam_params_for(occam_n, occam_k, occam_alpha, cls);
            gpr::OccamReport r = gpr::occam_gap(p, cls);
            out << "valid " << r.valid << "\n"
                << "epsilon " << r.epsilon << "\n"
                << "yes_bound " << r.yes_bound << "\n"
                << "no_bound " << r.no_bound << "\n"
                << "exponent_ok " << r.exponent_ok << "\n"
                << "gap_ok " << r.gap_ok << "\n"
                << "degenerate " << r.degenerate << "\n";
            return r.valid ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
