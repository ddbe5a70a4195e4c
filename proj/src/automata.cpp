#include "gpr/automata.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpr {

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_)
        if (b > 1) throw std::invalid_argument("bit values must be 0 or 1");
}

BitString BitString::parse(const std::string& text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("bad bit character");
        bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

void BitString::push_back(int bit) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit values must be 0 or 1");
    bits_.push_back(static_cast<uint8_t>(bit));
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (uint8_t b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

void SampleSet::add_positive(const BitString& s) {
    if (contains_negative(s)) throw std::invalid_argument("sample labeled both + and -");
    if (contains_positive(s)) return;
    positives_.push_back(s);
    total_bits_ += s.size();
}

void SampleSet::add_negative(const BitString& s) {
    if (contains_positive(s)) throw std::invalid_argument("sample labeled both + and -");
    if (contains_negative(s)) return;
    negatives_.push_back(s);
    total_bits_ += s.size();
}

bool SampleSet::contains_positive(const BitString& s) const {
    return std::find(positives_.begin(), positives_.end(), s) != positives_.end();
}

bool SampleSet::contains_negative(const BitString& s) const {
    return std::find(negatives_.begin(), negatives_.end(), s) != negatives_.end();
}

SampleSet read_samples(std::istream& in) {
    SampleSet out;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream row(line);
        std::string sign, bits;
        if (!(row >> sign)) continue;
        if (!(row >> bits)) bits.clear();  // empty string sample
        if (sign == "+") {
            out.add_positive(BitString::parse(bits));
        } else if (sign == "-") {
            out.add_negative(BitString::parse(bits));
        } else {
            throw std::runtime_error("sample input: expected '+' or '-'");
        }
    }
    return out;
}

SampleSet read_samples_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open sample file: " + path);
    return read_samples(in);
}

void write_samples(std::ostream& out, const SampleSet& samples) {
    for (const auto& s : samples.positives()) out << "+ " << s.to_string() << '\n';
    for (const auto& s : samples.negatives()) out << "- " << s.to_string() << '\n';
}

void write_samples_file(const std::string& path, const SampleSet& samples) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open sample file for write: " + path);
    write_samples(out, samples);
}

Dfa Dfa::with_states(int n, int start) {
    Dfa m;
    m.state_count = n;
    m.start = start;
    m.trans.assign(static_cast<size_t>(n), {-1, -1});
    m.accepting.assign(static_cast<size_t>(n), 0);
    return m;
}

void Dfa::set_trans(int from, int bit, int to) {
    trans[static_cast<size_t>(from)][static_cast<size_t>(bit)] = to;
}

void Dfa::validate() const {
    if (state_count < 1) throw std::invalid_argument("dfa needs at least one state");
    if (start < 0 || start >= state_count) throw std::invalid_argument("bad start state");
    if (static_cast<int>(trans.size()) != state_count ||
        static_cast<int>(accepting.size()) != state_count) {
        throw std::invalid_argument("dfa table sizes disagree with state count");
    }
    for (const auto& row : trans)
        for (int t : row)
            if (t < -1 || t >= state_count) throw std::invalid_argument("bad transition target");
}

Nfa Nfa::with_states(int n, int start) {
    if (n > 64) throw std::invalid_argument("nfa supports at most 64 states");
    Nfa m;
    m.state_count = n;
    m.start = start;
    m.trans.assign(static_cast<size_t>(n), {0, 0});
    m.accepting.assign(static_cast<size_t>(n), 0);
    return m;
}

void Nfa::add_trans(int from, int bit, int to) {
    trans[static_cast<size_t>(from)][static_cast<size_t>(bit)] |= uint64_t{1} << to;
}

void Nfa::validate() const {
    if (state_count < 1 || state_count > 64)
        throw std::invalid_argument("nfa state count must be in [1, 64]");
    if (start < 0 || start >= state_count) throw std::invalid_argument("bad start state");
    uint64_t valid = state_count == 64 ? ~uint64_t{0} : ((uint64_t{1} << state_count) - 1);
    for (const auto& row : trans)
        for (uint64_t t : row)
            if (t & ~valid) throw std::invalid_argument("bad transition target");
}

std::optional<int> dfa_run(const Dfa& m, const BitString& s) {
    int q = m.start;
    for (size_t i = 0; i < s.size(); ++i) {
        q = m.trans[static_cast<size_t>(q)][static_cast<size_t>(s[i])];
        if (q < 0) return std::nullopt;
    }
    return q;
}

bool dfa_accepts(const Dfa& m, const BitString& s) {
    auto q = dfa_run(m, s);
    return q.has_value() && m.accepting[static_cast<size_t>(*q)];
}

uint64_t nfa_run(const Nfa& m, const BitString& s) {
    uint64_t cur = uint64_t{1} << m.start;
    for (size_t i = 0; i < s.size(); ++i) {
        uint64_t next = 0;
        uint64_t rest = cur;
        while (rest) {
            int q = std::countr_zero(rest);
            rest &= rest - 1;
            next |= m.trans[static_cast<size_t>(q)][static_cast<size_t>(s[i])];
        }
        cur = next;
        if (cur == 0) break;
    }
    return cur;
}

bool nfa_accepts(const Nfa& m, const BitString& s) {
    uint64_t states = nfa_run(m, s);
    while (states) {
        int q = std::countr_zero(states);
        states &= states - 1;
        if (m.accepting[static_cast<size_t>(q)]) return true;
    }
    return false;
}

namespace {

template <typename Machine>
ConsistencyReport check_consistency(const Machine& m, const SampleSet& samples,
                                    bool (*accepts)(const Machine&, const BitString&)) {
    ConsistencyReport r;
    for (const auto& s : samples.positives()) {
        if (!accepts(m, s)) {
            r.consistent = false;
            r.violation_positive = true;
            r.violation = s;
            return r;
        }
    }
    for (const auto& s : samples.negatives()) {
        if (accepts(m, s)) {
            r.consistent = false;
            r.violation_positive = false;
            r.violation = s;
            return r;
        }
    }
    return r;
}

enum class Mark : uint8_t { unseen, open, done };

bool dfs_acyclic(int q, const std::vector<std::vector<int>>& succ, std::vector<Mark>& mark) {
    mark[static_cast<size_t>(q)] = Mark::open;
    for (int t : succ[static_cast<size_t>(q)]) {
        if (mark[static_cast<size_t>(t)] == Mark::open) return false;
        if (mark[static_cast<size_t>(t)] == Mark::unseen && !dfs_acyclic(t, succ, mark))
            return false;
    }
    mark[static_cast<size_t>(q)] = Mark::done;
    return true;
}

}  // namespace

ConsistencyReport is_consistent(const Dfa& m, const SampleSet& samples) {
    return check_consistency<Dfa>(m, samples, &dfa_accepts);
}

ConsistencyReport is_consistent(const Nfa& m, const SampleSet& samples) {
    return check_consistency<Nfa>(m, samples, &nfa_accepts);
}

bool is_acyclic(const Dfa& m) {
    std::vector<std::vector<int>> succ(static_cast<size_t>(m.state_count));
    for (int q = 0; q < m.state_count; ++q)
        for (int b = 0; b < 2; ++b)
            if (m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)] >= 0)
                succ[static_cast<size_t>(q)].push_back(
                    m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)]);
    std::vector<Mark> mark(static_cast<size_t>(m.state_count), Mark::unseen);
    return dfs_acyclic(m.start, succ, mark);
}

bool is_acyclic(const Nfa& m) {
    std::vector<std::vector<int>> succ(static_cast<size_t>(m.state_count));
    for (int q = 0; q < m.state_count; ++q)
        for (int b = 0; b < 2; ++b) {
            uint64_t rest = m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)];
            while (rest) {
                succ[static_cast<size_t>(q)].push_back(std::countr_zero(rest));
                rest &= rest - 1;
            }
        }
    std::vector<Mark> mark(static_cast<size_t>(m.state_count), Mark::unseen);
    return dfs_acyclic(m.start, succ, mark);
}

namespace {

template <typename Machine>
void write_machine_impl(std::ostream& out, const char* kind, const Machine& m,
                        const std::vector<std::tuple<int, int, int>>& transitions) {
    out << kind << ' ' << m.state_count << ' ' << m.start << '\n';
    for (auto [f, b, t] : transitions) out << "trans " << f << ' ' << b << ' ' << t << '\n';
    out << "accept";
    for (int q = 0; q < m.state_count; ++q)
        if (m.accepting[static_cast<size_t>(q)]) out << ' ' << q;
    out << '\n';
}

}  // namespace

void write_machine(std::ostream& out, const Dfa& m) {
    std::vector<std::tuple<int, int, int>> transitions;
    for (int q = 0; q < m.state_count; ++q)
        for (int b = 0; b < 2; ++b)
            if (m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)] >= 0)
                transitions.emplace_back(q, b, m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)]);
    write_machine_impl(out, "dfa", m, transitions);
}

void write_machine(std::ostream& out, const Nfa& m) {
    std::vector<std::tuple<int, int, int>> transitions;
    for (int q = 0; q < m.state_count; ++q)
        for (int b = 0; b < 2; ++b) {
            uint64_t rest = m.trans[static_cast<size_t>(q)][static_cast<size_t>(b)];
            while (rest) {
                transitions.emplace_back(q, b, std::countr_zero(rest));
                rest &= rest - 1;
            }
        }
    write_machine_impl(out, "nfa", m, transitions);
}

void write_machine_file(const std::string& path, const Dfa& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open machine file for write: " + path);
    write_machine(out, m);
}

void write_machine_file(const std::string& path, const Nfa& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open machine file for write: " + path);
    write_machine(out, m);
}

MachineFile read_machine(std::istream& in) {
    std::string line;
    std::string kind;
    int states = 0, start = 0;
    // header
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream row(line);
        if (row >> kind >> states >> start) break;
        kind.clear();
    }
    if (kind != "dfa" && kind != "nfa") throw std::runtime_error("machine input: bad header");

    MachineFile out;
    Dfa dfa;
    Nfa nfa;
    const bool deterministic = (kind == "dfa");
    if (deterministic) {
        dfa = Dfa::with_states(states, start);
    } else {
        nfa = Nfa::with_states(states, start);
    }
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        std::istringstream row(line);
        std::string verb;
        if (!(row >> verb)) continue;
        if (verb == "trans") {
            int f = 0, b = 0, t = 0;
            if (!(row >> f >> b >> t)) throw std::runtime_error("machine input: bad trans line");
            if (deterministic) {
                if (dfa.trans[static_cast<size_t>(f)][static_cast<size_t>(b)] >= 0)
                    throw std::runtime_error("machine input: duplicate dfa transition");
                dfa.set_trans(f, b, t);
            } else {
                nfa.add_trans(f, b, t);
            }
        } else if (verb == "accept") {
            int q = 0;
            while (row >> q) {
                if (deterministic) {
                    dfa.accepting[static_cast<size_t>(q)] = 1;
                } else {
                    nfa.accepting[static_cast<size_t>(q)] = 1;
                }
            }
        } else {
            throw std::runtime_error("machine input: unknown directive '" + verb + "'");
        }
    }
    if (deterministic) {
        dfa.validate();
        out.dfa = std::move(dfa);
    } else {
        nfa.validate();
        out.nfa = std::move(nfa);
    }
    return out;
}

MachineFile read_machine_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open machine file: " + path);
    return read_machine(in);
}

}  // namespace gpr
