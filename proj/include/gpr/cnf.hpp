#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "gpr/automata.hpp"
#include "gpr/graph.hpp"

namespace gpr {

// Monotone-style clause set over variables z(i,u), i in [k], u in [n],
// indexed var(i,u) = (i-1)*n + u. Clauses are sets of positive literals.
struct CnfFormula {
    int var_count = 0;
    std::vector<std::vector<int>> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
};

int cnf_var(int n, int i, int u);

// Assignments are bit strings of length var_count, index var-1.
bool clause_satisfied(const std::vector<int>& clause, const BitString& assignment);
bool formula_satisfied(const CnfFormula& f, const BitString& assignment);

struct CnfInstance {
    int n = 0;
    int k = 1;
    CnfFormula base;      // shape only: var_count, no clauses
    SampleSet samples;    // positive = must satisfy, negative = must falsify
};

// Positive assignments are two-hot edge rows per block, negatives are the
// one-hot encodings of vertex tuples.
CnfInstance reduce_cnf(const Graph& g, int k = 1);

bool cnf_consistent(const CnfFormula& f, const SampleSet& samples);

// One clause per color choice tuple; at most chi^k clauses.
CnfFormula build_cnf_from_coloring(const Graph& g, int k, const std::vector<int>& coloring);

// Reads a coloring back out of any consistent formula for the k=1 instance.
std::vector<int> extract_coloring_from_cnf(const Graph& g, const CnfFormula& f);

void write_dimacs(std::ostream& out, const CnfFormula& f);
CnfFormula read_dimacs(std::istream& in);

}  // namespace gpr
