#pragma once

#include <optional>
#include <vector>

#include "gpr/automata.hpp"
#include "gpr/cnf.hpp"
#include "gpr/edp.hpp"

namespace gpr {

// Node-count budget; wall-clock limit is optional and off by default so
// results stay deterministic.
struct SearchBudget {
    long long max_nodes = 20'000'000;
    double max_seconds = 0;  // 0 = no wall-clock limit
    long long nodes = 0;
    bool exhausted = false;

    bool tick();
};

// Bracketed oracle answer: lower <= optimum <= upper, exact when proven
// equal within budget.
struct DfaOracleResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::optional<Dfa> machine;  // witness for upper when available
};

// Smallest consistent DFA by iterative deepening on the state count over a
// prefix-tree folding search.
DfaOracleResult min_consistent_dfa(const SampleSet& samples, SearchBudget& budget);

struct NfaOracleResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::optional<Nfa> machine;
};

// Smallest consistent NFA by exhaustive enumeration up to max_states.
NfaOracleResult min_consistent_nfa(const SampleSet& samples, SearchBudget& budget,
                                   int max_states = 3);

struct EdpOracleResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    PathSet witness;  // achieves lower
};

// Maximum arc-disjoint path family. Plain mode routes each chosen line i
// from its own source to its own sink; orderly mode lets line i end at any
// sink whose index extends the increasing sink sequence.
EdpOracleResult edp_exact(const SwitchingGraph& w, SearchBudget& budget, bool orderly = false);

struct CycleOracleResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::vector<Cycle> witness;
};

// Maximum arc-disjoint packing of cycles with at most max_len vertices.
CycleOracleResult cycle_packing_exact(const CycleGadget& cg, int max_len, SearchBudget& budget);

struct CnfOracleResult {
    bool exact = false;
    int lower = 0;
    int upper = 0;
    std::optional<CnfFormula> formula;
};

// Fewest clauses consistent with the samples, by exact set cover over all
// clauses that every positive assignment satisfies. With no negatives the
// optimum is 0 and the witness is a single always-true clause.
CnfOracleResult min_consistent_cnf(const CnfInstance& inst, SearchBudget& budget);

}  // namespace gpr
