#include "gpr/cnf.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gpr {

int cnf_var(int n, int i, int u) { return (i - 1) * n + u; }

bool clause_satisfied(const std::vector<int>& clause, const BitString& assignment) {
    for (int var : clause)
        if (assignment[static_cast<size_t>(var - 1)]) return true;
    return false;
}

bool formula_satisfied(const CnfFormula& f, const BitString& assignment) {
    if (static_cast<int>(assignment.size()) != f.var_count)
        throw std::invalid_argument("assignment length mismatch");
    for (const auto& clause : f.clauses)
        if (!clause_satisfied(clause, assignment)) return false;
    return true;
}

namespace {

BitString one_hot(int var_count, const std::vector<int>& set_vars) {
    std::vector<uint8_t> bits(static_cast<size_t>(var_count), 0);
    for (int var : set_vars) bits[static_cast<size_t>(var - 1)] = 1;
    return BitString(std::move(bits));
}

}  // namespace

CnfInstance reduce_cnf(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.vertex_count();
    CnfInstance inst;
    inst.n = n;
    inst.k = k;
    inst.base.var_count = k * n;

    for (int i = 1; i <= k; ++i)
        for (auto [u, v] : g.edges())
            inst.samples.add_positive(
                one_hot(inst.base.var_count, {cnf_var(n, i, u), cnf_var(n, i, v)}));
    std::vector<int> tuple(static_cast<size_t>(k), 1);
    while (true) {
        std::vector<int> set_vars;
        for (int i = 1; i <= k; ++i)
            set_vars.push_back(cnf_var(n, i, tuple[static_cast<size_t>(i - 1)]));
        inst.samples.add_negative(one_hot(inst.base.var_count, set_vars));
        int pos = k - 1;
        while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n) tuple[static_cast<size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++tuple[static_cast<size_t>(pos)];
    }
    return inst;
}

bool cnf_consistent(const CnfFormula& f, const SampleSet& samples) {
    for (const auto& b : samples.positives())
        if (!formula_satisfied(f, b)) return false;
    for (const auto& b : samples.negatives())
        if (formula_satisfied(f, b)) return false;
    return true;
}

CnfFormula build_cnf_from_coloring(const Graph& g, int k, const std::vector<int>& coloring) {
    if (!is_proper_coloring(g, coloring)) throw std::invalid_argument("coloring is not proper");
    const int n = g.vertex_count();
    const int m = color_count(coloring);
    CnfFormula f;
    f.var_count = k * n;
    std::vector<int> choice(static_cast<size_t>(k), 1);
    while (true) {
        std::vector<int> clause;
        for (int i = 1; i <= k; ++i)
            for (int u = 1; u <= n; ++u)
                if (coloring[static_cast<size_t>(u - 1)] != choice[static_cast<size_t>(i - 1)])
                    clause.push_back(cnf_var(n, i, u));
        f.clauses.push_back(std::move(clause));
        int pos = k - 1;
        while (pos >= 0 && choice[static_cast<size_t>(pos)] == m) choice[static_cast<size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++choice[static_cast<size_t>(pos)];
    }
    return f;
}

std::vector<int> extract_coloring_from_cnf(const Graph& g, const CnfFormula& f) {
    const int n = g.vertex_count();
    if (f.var_count != n) throw std::invalid_argument("formula is not over single-block variables");
    CnfInstance inst = reduce_cnf(g, 1);
    if (!cnf_consistent(f, inst.samples)) throw std::invalid_argument("formula is not consistent");

    std::vector<int> lowest(static_cast<size_t>(n), -1);
    for (int u = 1; u <= n; ++u) {
        BitString b = one_hot(n, {u});
        for (int j = 0; j < f.clause_count(); ++j)
            if (!clause_satisfied(f.clauses[static_cast<size_t>(j)], b)) {
                lowest[static_cast<size_t>(u - 1)] = j;
                break;
            }
        if (lowest[static_cast<size_t>(u - 1)] < 0)
            throw std::logic_error("one-hot assignment falsifies no clause");
    }
    std::map<int, int> dense;
    std::vector<int> coloring(static_cast<size_t>(n));
    for (int u = 1; u <= n; ++u) {
        auto [it, fresh] = dense.try_emplace(lowest[static_cast<size_t>(u - 1)],
                                             static_cast<int>(dense.size()) + 1);
        (void)fresh;
        coloring[static_cast<size_t>(u - 1)] = it->second;
    }
    if (!is_proper_coloring(g, coloring))
        throw std::logic_error("extracted coloring is not proper");
    return coloring;
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.var_count << ' ' << f.clause_count() << '\n';
    for (const auto& clause : f.clauses) {
        for (int var : clause) out << var << ' ';
        out << "0\n";
    }
}

CnfFormula read_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    int expected = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            ss >> p >> fmt >> f.var_count >> expected;
            if (fmt != "cnf") throw std::runtime_error("bad dimacs header");
            continue;
        }
        std::vector<int> clause;
        int lit;
        while (ss >> lit && lit != 0) {
            if (lit < 0 || lit > f.var_count) throw std::runtime_error("bad dimacs literal");
            clause.push_back(lit);
        }
        f.clauses.push_back(std::move(clause));
    }
    if (expected >= 0 && expected != f.clause_count())
        throw std::runtime_error("dimacs clause count mismatch");
    return f;
}

}  // namespace gpr
