#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "gpr/harness.hpp"

using namespace gpr;

TEST_CASE("occam gap arithmetic") {
    // DFA, k = 1, alpha = 1/2: epsilon = (1 - 1/2) / 3 = 1/6.
    auto p = occam_params_for(1073741824.0, 1, 0.5, MachineClass::dfa);
    auto r = occam_gap(p, MachineClass::dfa);
    CHECK(r.valid);
    CHECK_FALSE(r.degenerate);
    CHECK(r.epsilon == doctest::Approx(1.0 / 6.0));
    CHECK(r.exponent_ok);
    CHECK(r.gap_ok);
    CHECK(r.yes_bound < r.no_bound);

    // DFA, k = 0, alpha = 0: epsilon = 1, target 1, bounds coincide.
    auto p0 = occam_params_for(1073741824.0, 0, 0.0, MachineClass::dfa);
    auto r0 = occam_gap(p0, MachineClass::dfa);
    CHECK(r0.valid);
    CHECK(r0.epsilon == doctest::Approx(1.0));
    CHECK(r0.exponent_ok);
    CHECK(r0.gap_ok);

    // NFA, k = 2, alpha = 1/2: epsilon = 0, degenerate but consistent.
    auto pn = occam_params_for(1073741824.0, 2, 0.5, MachineClass::nfa);
    auto rn = occam_gap(pn, MachineClass::nfa);
    CHECK(rn.valid);
    CHECK(rn.degenerate);
    CHECK(rn.epsilon == doctest::Approx(0.0));
    CHECK(rn.exponent_ok);
    CHECK(rn.gap_ok);

    // alpha out of range is rejected.
    auto pb = occam_params_for(1073741824.0, 1, 1.0, MachineClass::dfa);
    auto rb = occam_gap(pb, MachineClass::dfa);
    CHECK_FALSE(rb.valid);
}

TEST_CASE("induction bound rejects nonpositive depth") {
    SearchBudget b;
    CHECK_THROWS_AS(
        check_induction_bound(edp_profile(), edp_adapter(), complete_graph(2), 0, b),
        std::invalid_argument);
}

TEST_CASE("projection checks on a tiny pair") {
    SearchBudget b;
    b.max_nodes = 5'000'000;
    auto rs = check_projection(edp_profile(), edp_adapter(), complete_graph(2), path_graph(3), b);
    REQUIRE_FALSE(rs.empty());
    for (const auto& r : rs) CHECK(r.status != CheckStatus::fail);
}

TEST_CASE("meta suite passes") {
    SuiteOptions opts;
    opts.budget_nodes = 5'000'000;
    SuiteReport rep = run_suite("meta", opts);
    CHECK(rep.ok());
    CHECK(rep.count(CheckStatus::fail) == 0);
    CHECK(rep.checks.size() > 0);
}

TEST_CASE("unknown suite name throws") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    auto names = suite_names();
    CHECK(names.size() == 7);
}

TEST_CASE("report rendering is deterministic") {
    SuiteReport rep;
    rep.suite = "demo";
    rep.checks.push_back({"a/1", CheckStatus::pass, "fine"});
    rep.checks.push_back({"a/2", CheckStatus::inconclusive, "budget"});
    std::ostringstream s1, s2;
    render_report(s1, rep);
    render_report(s2, rep);
    CHECK(s1.str() == s2.str());
    CHECK(render_report_json(rep) == render_report_json(rep));
    CHECK(s1.str().find("summary") != std::string::npos);
    CHECK(rep.ok());
}
