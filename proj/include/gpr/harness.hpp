#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gpr/fa_reduction.hpp"
#include "gpr/graph.hpp"
#include "gpr/oracles.hpp"

namespace gpr {

enum class CheckStatus { pass, fail, inconclusive };
const char* check_status_name(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    int count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::fail) == 0; }
};

struct SuiteOptions {
    long long budget_nodes = 2'000'000;
    double budget_seconds = 0;
    uint64_t seed = 1;
    int random_pairs = 50;
};

// Projection profile of a reduction: the universal constants of the paired
// growth claims. kind picks alpha (maximization) or chi (minimization).
enum class ProfileKind { alpha, chi };

struct ProjectionProfile {
    ProfileKind kind = ProfileKind::alpha;
    double c0 = 1, c1 = 2, c2 = 1, d = 2;
};

ProjectionProfile edp_profile();
ProjectionProfile fa_profile();

// Bracketed optimum of the reduced instance for a graph.
struct OracleValue {
    bool exact = false;
    double lower = 0;
    double upper = 0;
};

struct ReductionAdapter {
    std::string name;
    std::function<OracleValue(const Graph&, SearchBudget&)> opt;
    std::function<double(const Graph&)> instance_size;
};

ReductionAdapter edp_adapter();  // orderly disjoint-path count of the grid gadget
ReductionAdapter fa_adapter();   // minimum consistent DFA size of the quadratic samples

// Property (I): opt(R[x]) >= value(x) for x in {g, h, g.h}.
// Property (II): opt(R[g.h]) <= |V(g)|^c1 + value(g)^c2 * opt(R[h]).
// Property (III): opt(R[x]) <= c0 * |R[x]|.
// Brackets that cannot settle a side make the check inconclusive.
std::vector<CheckResult> check_projection(const ProjectionProfile& profile,
                                          const ReductionAdapter& adapter, const Graph& g,
                                          const Graph& h, SearchBudget& budget);

// opt(R[g^l]) <= l * c0 * |V(g)|^(c1+d+1) * value(g)^(2*c2*l) for l = 1..l_max.
std::vector<CheckResult> check_induction_bound(const ProjectionProfile& profile,
                                               const ReductionAdapter& adapter, const Graph& g,
                                               int l_max, SearchBudget& budget);

enum class MachineClass { dfa, nfa };

struct OccamParams {
    double k = 1;
    double alpha = 0.5;
    double s = 0;  // sample count
    double m = 0;  // max sample length
    double n = 0;  // smallest consistent hypothesis size
};

// s = N, m = log2 N, n = N^epsilon: the shape the gap argument instantiates.
OccamParams occam_params_for(double big_n, double k, double alpha, MachineClass cls);

struct OccamReport {
    bool valid = false;
    bool degenerate = false;  // epsilon = 0
    double epsilon = 0;
    double yes_bound = 0;  // n^k * m^k * s^alpha
    double no_bound = 0;   // s^(target - epsilon), target 1 (DFA) or 1/2 (NFA)
    bool exponent_ok = false;  // alpha + (2k+1) * epsilon = target
    bool gap_ok = false;       // yes_bound < no_bound whenever epsilon > 0
    std::string detail;
};

OccamReport occam_gap(const OccamParams& params, MachineClass cls);

// chi(pad(g)^k) <= minimal consistent DFA size <= built acyclic DFA size.
struct SandwichResult {
    int chi_power = 0;
    DfaOracleResult oracle;
    int built_size = 0;
    int built_bound = 0;
    bool construction_ok = false;  // acyclic + consistent + size within bound
    CheckStatus oracle_status = CheckStatus::inconclusive;
    std::string detail;
};

SandwichResult verify_fa_sandwich(const Graph& g, int k, SearchBudget& budget);

// Orderly path count of the product gadget against 3|V(g)|^2 + alpha(g) * that of h.
struct EdpProductBoundResult {
    EdpOracleResult product;
    EdpOracleResult factor_h;
    double rhs = 0;
    CheckStatus status = CheckStatus::inconclusive;
    std::string detail;
};

EdpProductBoundResult verify_edp_product_bound(const Graph& g, const Graph& h,
                                               SearchBudget& budget);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

// Plain-text table; deterministic for identical inputs.
void render_report(std::ostream& out, const SuiteReport& report);
// Machine-readable rendering with stable key order.
std::string render_report_json(const SuiteReport& report);

}  // namespace gpr
