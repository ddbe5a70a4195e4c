#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gpr {

// Binary string, bit values 0/1.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<uint8_t> bits);
    static BitString parse(const std::string& text);  // e.g. "0110"

    void push_back(int bit);
    void append(const BitString& other);
    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int operator[](size_t i) const { return bits_[i]; }
    std::string to_string() const;

    auto operator<=>(const BitString&) const = default;

private:
    std::vector<uint8_t> bits_;
};

// Labeled samples; positives and negatives must stay disjoint.
class SampleSet {
public:
    void add_positive(const BitString& s);
    void add_negative(const BitString& s);

    const std::vector<BitString>& positives() const { return positives_; }
    const std::vector<BitString>& negatives() const { return negatives_; }
    size_t size() const { return positives_.size() + negatives_.size(); }
    size_t total_bits() const { return total_bits_; }

    bool contains_positive(const BitString& s) const;
    bool contains_negative(const BitString& s) const;

private:
    std::vector<BitString> positives_;
    std::vector<BitString> negatives_;
    size_t total_bits_ = 0;
};

// File format: "+ <bits>" / "- <bits>" lines, '#' comments.
SampleSet read_samples(std::istream& in);
SampleSet read_samples_file(const std::string& path);
void write_samples(std::ostream& out, const SampleSet& samples);
void write_samples_file(const std::string& path, const SampleSet& samples);

// Deterministic automaton over {0,1}; transitions may be undefined (-1),
// which behave as an implicit non-accepting dead state. Only explicit
// states count toward size.
struct Dfa {
    int state_count = 0;
    int start = 0;
    std::vector<std::array<int, 2>> trans;  // trans[q][bit], -1 = undefined
    std::vector<uint8_t> accepting;

    static Dfa with_states(int n, int start = 0);
    void set_trans(int from, int bit, int to);
    int next(int state, int bit) const { return trans[state][bit]; }
    void validate() const;
};

// Nondeterministic automaton over {0,1}; at most 64 states.
struct Nfa {
    int state_count = 0;
    int start = 0;
    std::vector<std::array<uint64_t, 2>> trans;  // successor bitmasks
    std::vector<uint8_t> accepting;

    static Nfa with_states(int n, int start = 0);
    void add_trans(int from, int bit, int to);
    void validate() const;
};

// Final state after reading s, or nullopt if the run dies.
std::optional<int> dfa_run(const Dfa& m, const BitString& s);
bool dfa_accepts(const Dfa& m, const BitString& s);

// Bitmask of states reachable after reading s.
uint64_t nfa_run(const Nfa& m, const BitString& s);
bool nfa_accepts(const Nfa& m, const BitString& s);

struct ConsistencyReport {
    bool consistent = true;
    bool violation_positive = false;  // sign of the first violating sample
    BitString violation;

    explicit operator bool() const { return consistent; }
};

ConsistencyReport is_consistent(const Dfa& m, const SampleSet& samples);
ConsistencyReport is_consistent(const Nfa& m, const SampleSet& samples);

// Cycle check over states reachable from the start via defined transitions.
bool is_acyclic(const Dfa& m);
bool is_acyclic(const Nfa& m);

// Machine file format: "dfa <state_count> <start>" or "nfa ...", then
// "trans <from> <bit> <to>" lines and one "accept <state>..." line.
void write_machine(std::ostream& out, const Dfa& m);
void write_machine(std::ostream& out, const Nfa& m);
void write_machine_file(const std::string& path, const Dfa& m);
void write_machine_file(const std::string& path, const Nfa& m);

// Reads either kind; exactly one of the results is set.
struct MachineFile {
    std::optional<Dfa> dfa;
    std::optional<Nfa> nfa;
};
MachineFile read_machine(std::istream& in);
MachineFile read_machine_file(const std::string& path);

}  // namespace gpr
