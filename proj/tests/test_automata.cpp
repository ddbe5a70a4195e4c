#include <sstream>

#include "doctest.h"
#include "gpr/automata.hpp"

using namespace gpr;

TEST_CASE("bitstring parse and order") {
    BitString s = BitString::parse("0110");
    CHECK(s.size() == 4);
    CHECK(s.to_string() == "0110");
    CHECK(BitString::parse("01") < BitString::parse("0110"));
    CHECK(BitString::parse("") == BitString());
}

TEST_CASE("sample set enforces label disjointness") {
    SampleSet s;
    s.add_positive(BitString::parse("01"));
    s.add_positive(BitString::parse("01"));
    CHECK(s.positives().size() == 1);
    CHECK_THROWS(s.add_negative(BitString::parse("01")));
    s.add_negative(BitString::parse("10"));
    CHECK(s.size() == 2);
    CHECK(s.total_bits() == 4);
}

TEST_CASE("samples io round trip") {
    SampleSet s;
    s.add_positive(BitString::parse("101"));
    s.add_negative(BitString::parse(""));
    std::stringstream ss;
    write_samples(ss, s);
    SampleSet back = read_samples(ss);
    CHECK(back.contains_positive(BitString::parse("101")));
    CHECK(back.contains_negative(BitString()));
}

namespace {

// Accepts strings with an odd number of ones.
Dfa parity_dfa() {
    Dfa m = Dfa::with_states(2);
    m.set_trans(0, 0, 0);
    m.set_trans(0, 1, 1);
    m.set_trans(1, 0, 1);
    m.set_trans(1, 1, 0);
    m.accepting = {0, 1};
    return m;
}

}  // namespace

TEST_CASE("dfa run and consistency") {
    Dfa m = parity_dfa();
    CHECK(dfa_accepts(m, BitString::parse("1")));
    CHECK(dfa_accepts(m, BitString::parse("0111")));
    CHECK_FALSE(dfa_accepts(m, BitString::parse("11")));

    SampleSet s;
    s.add_positive(BitString::parse("1"));
    s.add_negative(BitString::parse("11"));
    CHECK(static_cast<bool>(is_consistent(m, s)));

    SampleSet bad;
    bad.add_positive(BitString::parse("11"));
    auto rep = is_consistent(m, bad);
    CHECK_FALSE(rep.consistent);
    CHECK(rep.violation_positive);
}

TEST_CASE("undefined transitions reject") {
    Dfa m = Dfa::with_states(1);
    m.accepting = {1};
    CHECK(dfa_accepts(m, BitString()));
    CHECK_FALSE(dfa_accepts(m, BitString::parse("0")));
    CHECK_FALSE(dfa_run(m, BitString::parse("1")).has_value());
}

TEST_CASE("nfa run collects state sets") {
    Nfa m = Nfa::with_states(3);
    m.add_trans(0, 1, 1);
    m.add_trans(0, 1, 2);
    m.add_trans(1, 0, 1);
    m.accepting = {0, 0, 1};
    CHECK(nfa_run(m, BitString::parse("1")) == 0b110);
    CHECK(nfa_accepts(m, BitString::parse("1")));
    CHECK_FALSE(nfa_accepts(m, BitString::parse("10")));
}

TEST_CASE("acyclicity detection") {
    Dfa m = parity_dfa();
    CHECK_FALSE(is_acyclic(m));  // self loop at state 0
    Dfa chain = Dfa::with_states(3);
    chain.set_trans(0, 0, 1);
    chain.set_trans(1, 1, 2);
    CHECK(is_acyclic(chain));
    // A cycle beyond reach of the start does not count.
    Nfa n = Nfa::with_states(2, 1);
    n.add_trans(0, 0, 0);
    CHECK(is_acyclic(n));
}

TEST_CASE("machine io round trip") {
    Dfa m = parity_dfa();
    std::stringstream ss;
    write_machine(ss, m);
    MachineFile f = read_machine(ss);
    REQUIRE(f.dfa.has_value());
    CHECK(f.dfa->state_count == 2);
    CHECK(dfa_accepts(*f.dfa, BitString::parse("100")));
}
