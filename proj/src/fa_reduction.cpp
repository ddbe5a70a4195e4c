#include "gpr/fa_reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

namespace gpr {

EncodingContext EncodingContext::for_count(int n) {
    if (n < 1) throw std::invalid_argument("encoding needs at least one vertex");
    EncodingContext ctx;
    ctx.n = n;
    ctx.k_bits = 0;
    while ((1 << ctx.k_bits) < n) ++ctx.k_bits;
    ctx.padded_n = 1 << ctx.k_bits;
    return ctx;
}

BitString EncodingContext::encode(int u) const {
    if (u < 1 || u > padded_n) throw std::out_of_range("vertex outside padded range");
    BitString out;
    for (int i = k_bits - 1; i >= 0; --i) out.push_back(((u - 1) >> i) & 1);
    return out;
}

BitString EncodingContext::encode_reversed(int u) const { return reversed(encode(u)); }

int EncodingContext::decode(const BitString& s, size_t offset) const {
    if (offset + static_cast<size_t>(k_bits) > s.size())
        throw std::out_of_range("decode window past end of string");
    int value = 0;
    for (int i = 0; i < k_bits; ++i) value = value * 2 + s[offset + static_cast<size_t>(i)];
    return value + 1;
}

BitString reversed(const BitString& s) {
    BitString out;
    for (size_t i = s.size(); i > 0; --i) out.push_back(s[i - 1]);
    return out;
}

SampleSet reduce_quadratic(const Graph& g) {
    return reduce_quadratic(g, EncodingContext::for_graph(g));
}

SampleSet reduce_quadratic(const Graph& g, const EncodingContext& ctx) {
    if (g.vertex_count() < 2) throw std::invalid_argument("reduction needs at least 2 vertices");
    SampleSet out;
    for (int u = 1; u <= ctx.padded_n; ++u) {
        BitString s = ctx.encode(u);
        s.push_back(1);
        s.append(ctx.encode_reversed(u));
        out.add_positive(s);
    }
    for (auto [u, v] : g.edges()) {
        for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
            BitString s = ctx.encode(a);
            s.push_back(1);
            s.append(ctx.encode_reversed(b));
            out.add_negative(s);
        }
    }
    return out;
}

namespace {

// Iterates tuples (u_1..u_k) over 1..base, first coordinate most significant.
bool next_tuple(std::vector<int>& tuple, int base) {
    for (size_t i = tuple.size(); i > 0; --i) {
        if (tuple[i - 1] < base) {
            ++tuple[i - 1];
            return true;
        }
        tuple[i - 1] = 1;
    }
    return false;
}

BitString encode_blocks(const EncodingContext& ctx, const std::vector<int>& tuple, size_t count) {
    BitString out;
    for (size_t i = 0; i < count; ++i) out.append(ctx.encode(tuple[i]));
    return out;
}

}  // namespace

SampleSet reduce_tight(const Graph& g, int k) {
    return reduce_tight(g, k, EncodingContext::for_graph(g));
}

SampleSet reduce_tight(const Graph& g, int k, const EncodingContext& ctx) {
    if (g.vertex_count() < 2) throw std::invalid_argument("reduction needs at least 2 vertices");
    if (k < 1) throw std::invalid_argument("tuple length must be >= 1");
    SampleSet out;
    std::vector<int> tuple(static_cast<size_t>(k), 1);
    do {
        BitString prefix = encode_blocks(ctx, tuple, static_cast<size_t>(k));
        prefix.push_back(1);
        for (int i = 1; i <= k; ++i) {
            BitString pos = prefix;
            pos.append(encode_blocks(ctx, tuple, static_cast<size_t>(i)));
            out.add_positive(pos);

            int ui = tuple[static_cast<size_t>(i - 1)];
            if (ui > g.vertex_count()) continue;  // padding vertex, no neighbors
            uint64_t nbrs = g.neighbor_mask(ui);
            while (nbrs) {
                int v = std::countr_zero(nbrs) + 1;
                nbrs &= nbrs - 1;
                BitString neg = prefix;
                neg.append(encode_blocks(ctx, tuple, static_cast<size_t>(i - 1)));
                neg.append(ctx.encode(v));
                out.add_negative(neg);
            }
        }
    } while (next_tuple(tuple, ctx.padded_n));
    return out;
}

int LayeredDfa::depth() const {
    int d = 0;
    for (int l : layer) d = std::max(d, l);
    return d;
}

bool LayeredDfa::layering_holds() const {
    if (static_cast<int>(layer.size()) != dfa.state_count) return false;
    if (layer[static_cast<size_t>(dfa.start)] != 0) return false;
    for (int q = 0; q < dfa.state_count; ++q)
        for (int b = 0; b < 2; ++b) {
            int t = dfa.trans[static_cast<size_t>(q)][static_cast<size_t>(b)];
            if (t >= 0 && layer[static_cast<size_t>(t)] != layer[static_cast<size_t>(q)] + 1)
                return false;
        }
    return true;
}

LayeredDfa build_base_dfa(const Graph& g) {
    EncodingContext ctx = EncodingContext::for_graph(g);
    const int depth = 2 * ctx.k_bits + 1;
    // Node id for the prefix of length len with value val: offset[len] + val.
    std::vector<int> offset(static_cast<size_t>(depth) + 2, 0);
    for (int len = 0; len <= depth; ++len) offset[static_cast<size_t>(len) + 1] =
        offset[static_cast<size_t>(len)] + (1 << len);
    const int total = offset[static_cast<size_t>(depth) + 1];

    LayeredDfa out;
    out.dfa = Dfa::with_states(total, 0);
    out.layer.assign(static_cast<size_t>(total), 0);
    for (int len = 0; len < depth; ++len) {
        for (int val = 0; val < (1 << len); ++val) {
            int id = offset[static_cast<size_t>(len)] + val;
            out.layer[static_cast<size_t>(id)] = len;
            for (int b = 0; b < 2; ++b)
                out.dfa.set_trans(id, b, offset[static_cast<size_t>(len) + 1] + val * 2 + b);
        }
    }
    for (int val = 0; val < (1 << depth); ++val)
        out.layer[static_cast<size_t>(offset[static_cast<size_t>(depth)] + val)] = depth;

    SampleSet samples = reduce_quadratic(g, ctx);
    for (const auto& s : samples.positives()) {
        int val = 0;
        for (size_t i = 0; i < s.size(); ++i) val = val * 2 + s[i];
        out.dfa.accepting[static_cast<size_t>(offset[static_cast<size_t>(depth)] + val)] = 1;
    }
    return out;
}

ProductDfaResult build_product_dfa(const Graph& g, const std::vector<int>& g_coloring,
                                   const LayeredDfa& h_machine) {
    const int ng = g.vertex_count();
    if (!is_proper_coloring(g, g_coloring))
        throw std::invalid_argument("g coloring is not proper");
    if (!h_machine.layering_holds())
        throw std::invalid_argument("h machine is not layered");
    const Dfa& mh = h_machine.dfa;
    const int h_depth = h_machine.depth();
    for (int q = 0; q < mh.state_count; ++q)
        if (mh.accepting[static_cast<size_t>(q)] &&
            h_machine.layer[static_cast<size_t>(q)] != h_depth)
            throw std::invalid_argument("h machine accepts outside its last layer");

    EncodingContext ctx = EncodingContext::for_graph(g);
    const int kg = ctx.k_bits;
    const int copies = color_count(g_coloring);
    auto color_of = [&](int u) { return u <= ng ? g_coloring[static_cast<size_t>(u - 1)] : 1; };

    // State ids: phase-1 internal tree nodes, then per-copy h states (with
    // accepting states elided), then per-copy reversed vertex trees.
    std::vector<int> tree_offset(static_cast<size_t>(kg) + 1, 0);
    for (int len = 0; len < kg; ++len)
        tree_offset[static_cast<size_t>(len) + 1] = tree_offset[static_cast<size_t>(len)] + (1 << len);
    const int phase1_states = kg > 0 ? tree_offset[static_cast<size_t>(kg)] : 0;

    std::vector<int> h_keep(static_cast<size_t>(mh.state_count), -1);
    int kept = 0;
    for (int q = 0; q < mh.state_count; ++q)
        if (!mh.accepting[static_cast<size_t>(q)]) h_keep[static_cast<size_t>(q)] = kept++;

    const int out_tree_states = (1 << (kg + 1)) - 1;  // internal + leaves
    const int per_copy = kept + out_tree_states;
    const int total = phase1_states + copies * per_copy;

    LayeredDfa out;
    out.dfa = Dfa::with_states(total, 0);
    out.layer.assign(static_cast<size_t>(total), 0);

    auto copy_base = [&](int j) { return phase1_states + (j - 1) * per_copy; };
    auto copy_state = [&](int j, int q) { return copy_base(j) + h_keep[static_cast<size_t>(q)]; };
    auto out_tree_node = [&](int j, int len, int val) {
        return copy_base(j) + kept + ((1 << len) - 1) + val;
    };
    auto copy_root = [&](int j) {
        return mh.accepting[static_cast<size_t>(mh.start)] ? out_tree_node(j, 0, 0)
                                                           : copy_state(j, mh.start);
    };

    // Phase 1: vertex tree over enc(u); leaves merge into copy roots.
    if (kg == 0) {
        out.dfa.start = copy_root(color_of(1));
    } else {
        for (int len = 0; len < kg; ++len)
            for (int val = 0; val < (1 << len); ++val) {
                int id = tree_offset[static_cast<size_t>(len)] + val;
                out.layer[static_cast<size_t>(id)] = len;
                for (int b = 0; b < 2; ++b) {
                    int child_val = val * 2 + b;
                    if (len + 1 == kg) {
                        out.dfa.set_trans(id, b, copy_root(color_of(child_val + 1)));
                    } else {
                        out.dfa.set_trans(id, b,
                                          tree_offset[static_cast<size_t>(len) + 1] + child_val);
                    }
                }
            }
    }

    // Phase 2: copies of the h machine; transitions into accepting states are
    // redirected to the copy's reversed vertex tree root.
    for (int j = 1; j <= copies; ++j) {
        for (int q = 0; q < mh.state_count; ++q) {
            if (mh.accepting[static_cast<size_t>(q)]) continue;
            int id = copy_state(j, q);
            out.layer[static_cast<size_t>(id)] = kg + h_machine.layer[static_cast<size_t>(q)];
            for (int b = 0; b < 2; ++b) {
                int t = mh.trans[static_cast<size_t>(q)][static_cast<size_t>(b)];
                if (t < 0) continue;
                if (mh.accepting[static_cast<size_t>(t)]) {
                    out.dfa.set_trans(id, b, out_tree_node(j, 0, 0));
                } else {
                    out.dfa.set_trans(id, b, copy_state(j, t));
                }
            }
        }
        // Phase 3: reversed vertex tree; leaf for rev(enc(u)) accepts iff
        // u belongs to this copy's color class.
        for (int len = 0; len <= kg; ++len)
            for (int val = 0; val < (1 << len); ++val) {
                int id = out_tree_node(j, len, val);
                out.layer[static_cast<size_t>(id)] = kg + h_depth + len;
                if (len < kg) {
                    for (int b = 0; b < 2; ++b)
                        out.dfa.set_trans(id, b, out_tree_node(j, len + 1, val * 2 + b));
                } else {
                    // val holds rev(enc(u)) read MSB-first; undo the reversal.
                    int e = 0;
                    for (int i = 0; i < kg; ++i) e |= ((val >> i) & 1) << (kg - 1 - i);
                    out.dfa.accepting[static_cast<size_t>(id)] = (color_of(e + 1) == j);
                }
            }
    }

    ProductDfaResult result;
    result.machine = std::move(out);
    result.copies = copies;
    result.base_size = mh.state_count;
    result.size = total;
    constexpr int kSizeConstant = 8;
    result.size_bound = copies * (mh.state_count + kSizeConstant * std::max(ng, 1));
    result.realized_c =
        static_cast<double>(std::max(0, total - copies * mh.state_count)) /
        (static_cast<double>(copies) * std::max(ng, 1));
    return result;
}

namespace {

class TightBuilder {
public:
    TightBuilder(const Graph& g, const std::vector<int>& coloring, int k)
        : ctx_(EncodingContext::for_graph(g)), k_(k) {
        sigma_.assign(static_cast<size_t>(ctx_.padded_n) + 1, 1);
        for (int u = 1; u <= g.vertex_count(); ++u)
            sigma_[static_cast<size_t>(u)] = coloring[static_cast<size_t>(u - 1)];
    }

    LayeredDfa build() {
        std::vector<int> colors;
        int start = build_tree(0, colors);
        LayeredDfa out;
        out.dfa.state_count = static_cast<int>(trans_.size());
        out.dfa.start = start;
        out.dfa.trans = std::move(trans_);
        out.dfa.accepting = std::move(accepting_);
        out.layer = std::move(layer_);
        return out;
    }

private:
    int new_state(int lay, bool acc) {
        trans_.push_back({-1, -1});
        accepting_.push_back(acc ? 1 : 0);
        layer_.push_back(lay);
        return static_cast<int>(trans_.size()) - 1;
    }

    // Vertex tree for the skeleton node at level t whose root-path colors are
    // `colors` (colors[j] is the class recorded after block j+1).
    int build_tree(int t, std::vector<int>& colors) {
        const int base_layer = t * ctx_.k_bits + (t >= k_ ? 1 : 0);
        const bool root_accepts =
            t >= k_ + 1 && colors[static_cast<size_t>(t - 1)] == colors[static_cast<size_t>(t - k_ - 1)];

        // Internal binary nodes, prefix lengths 0..k_bits-1.
        std::vector<std::vector<int>> node(static_cast<size_t>(ctx_.k_bits));
        for (int len = 0; len < ctx_.k_bits; ++len) {
            node[static_cast<size_t>(len)].resize(static_cast<size_t>(1) << len);
            for (int val = 0; val < (1 << len); ++val)
                node[static_cast<size_t>(len)][static_cast<size_t>(val)] =
                    new_state(base_layer + len, len == 0 && root_accepts);
        }
        for (int len = 0; len + 1 < ctx_.k_bits; ++len)
            for (int val = 0; val < (1 << len); ++val)
                for (int b = 0; b < 2; ++b)
                    trans_[static_cast<size_t>(node[static_cast<size_t>(len)][static_cast<size_t>(val)])]
                          [static_cast<size_t>(b)] =
                              node[static_cast<size_t>(len) + 1][static_cast<size_t>(val * 2 + b)];

        std::map<int, int> child_by_color;
        auto child_root = [&](int color) {
            auto it = child_by_color.find(color);
            if (it != child_by_color.end()) return it->second;
            colors.push_back(color);
            int root = build_tree(t + 1, colors);
            colors.pop_back();
            child_by_color.emplace(color, root);
            return root;
        };

        for (int e = 0; e < ctx_.padded_n; ++e) {
            const int u = e + 1;
            const int s = sigma_[static_cast<size_t>(u)];
            int parent = node[static_cast<size_t>(ctx_.k_bits) - 1][static_cast<size_t>(e >> 1)];
            int bit = e & 1;
            if (t == 2 * k_ - 1) {
                bool acc = (s == colors[static_cast<size_t>(t - k_)]);
                int leaf = new_state(base_layer + ctx_.k_bits, acc);
                trans_[static_cast<size_t>(parent)][static_cast<size_t>(bit)] = leaf;
            } else if (t == k_ - 1) {
                int leaf = new_state(base_layer + ctx_.k_bits, false);
                trans_[static_cast<size_t>(parent)][static_cast<size_t>(bit)] = leaf;
                trans_[static_cast<size_t>(leaf)][1] = child_root(s);
            } else {
                trans_[static_cast<size_t>(parent)][static_cast<size_t>(bit)] = child_root(s);
            }
        }
        return node[0][0];
    }

    EncodingContext ctx_;
    int k_;
    std::vector<int> sigma_;
    std::vector<std::array<int, 2>> trans_;
    std::vector<uint8_t> accepting_;
    std::vector<int> layer_;
};

}  // namespace

TightAdfaResult build_tight_adfa(const Graph& g, const std::vector<int>& g_coloring, int k) {
    if (g.vertex_count() < 2) throw std::invalid_argument("construction needs at least 2 vertices");
    if (k < 1) throw std::invalid_argument("tuple length must be >= 1");
    if (!is_proper_coloring(g, g_coloring))
        throw std::invalid_argument("g coloring is not proper");
    TightBuilder builder(g, g_coloring, k);
    TightAdfaResult out;
    out.machine = builder.build();
    out.colors = color_count(g_coloring);
    out.size = out.machine.dfa.state_count;
    const int padded = EncodingContext::for_graph(g).padded_n;
    if (out.colors >= 2) {
        long long bound = 2LL * padded;
        for (int i = 0; i < 2 * k; ++i) bound *= out.colors;
        out.size_bound = static_cast<int>(bound);
    } else {
        out.size_bound = 2 * padded * (2 * k + 1);
    }
    return out;
}

std::vector<int> extract_coloring_from_nfa(const Nfa& m, const Graph& g) {
    EncodingContext ctx = EncodingContext::for_graph(g);
    if (!is_consistent(m, reduce_quadratic(g, ctx)))
        throw std::invalid_argument("machine is not consistent with the quadratic reduction");
    const int n = g.vertex_count();
    std::vector<uint64_t> reach(static_cast<size_t>(n) + 1, 0);
    for (int u = 1; u <= n; ++u) reach[static_cast<size_t>(u)] = nfa_run(m, ctx.encode(u));
    std::vector<int> coloring(static_cast<size_t>(n), 0);
    for (int u = 1; u <= n; ++u) {
        uint64_t priv = reach[static_cast<size_t>(u)];
        uint64_t nbrs = g.neighbor_mask(u);
        while (nbrs) {
            int v = std::countr_zero(nbrs) + 1;
            nbrs &= nbrs - 1;
            priv &= ~reach[static_cast<size_t>(v)];
        }
        if (priv == 0)
            throw std::logic_error("no private state; machine cannot be consistent");
        coloring[static_cast<size_t>(u - 1)] = std::countr_zero(priv) + 1;
    }
    if (!is_proper_coloring(g, coloring))
        throw std::logic_error("extracted coloring is not proper");
    return coloring;
}

TightColoring extract_coloring_from_dfa_tight(const Dfa& m, const Graph& g, int k) {
    EncodingContext ctx = EncodingContext::for_graph(g);
    if (!is_consistent(m, reduce_tight(g, k, ctx)))
        throw std::invalid_argument("machine is not consistent with the tuple reduction");
    std::vector<int> state_of;
    std::vector<int> tuple(static_cast<size_t>(k), 1);
    do {
        auto q = dfa_run(m, encode_blocks(ctx, tuple, static_cast<size_t>(k)));
        if (!q) throw std::logic_error("consistent machine died on a tuple prefix");
        state_of.push_back(*q);
    } while (next_tuple(tuple, ctx.padded_n));

    // Dense-renumber the states that actually appear.
    std::map<int, int> renumber;
    TightColoring out;
    for (int q : state_of) {
        auto [it, inserted] = renumber.emplace(q, static_cast<int>(renumber.size()) + 1);
        out.colors.push_back(it->second);
        (void)inserted;
    }
    out.classes_used = static_cast<int>(renumber.size());

    Graph power = k_fold_power(pad_with_isolated(g, ctx.padded_n), k);
    for (auto [a, b] : power.edges())
        if (out.colors[static_cast<size_t>(a - 1)] == out.colors[static_cast<size_t>(b - 1)])
            throw std::logic_error("extracted tuple coloring is not proper");
    return out;
}

}  // namespace gpr
