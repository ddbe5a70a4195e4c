#include "gpr/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpr {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > 64) {
        throw std::invalid_argument("graph size must be in [0, 64]");
    }
}

void Graph::check_vertex(int u) const {
    if (u < 1 || u > n_) {
        throw std::out_of_range("vertex index out of range");
    }
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[u - 1] >> (v - 1)) & 1;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    adj_[u - 1] |= uint64_t{1} << (v - 1);
    adj_[v - 1] |= uint64_t{1} << (u - 1);
}

uint64_t Graph::neighbor_mask(int u) const {
    check_vertex(u);
    return adj_[u - 1];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u) {
        uint64_t row = adj_[u - 1] >> u;  // neighbors v > u
        while (row) {
            int v = u + 1 + std::countr_zero(row);
            out.emplace_back(u, v);
            row &= row - 1;
        }
    }
    return out;
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n, 1);
    return g;
}

Graph pad_with_isolated(const Graph& g, int target_n) {
    if (target_n < g.vertex_count()) {
        throw std::invalid_argument("padding cannot shrink a graph");
    }
    Graph out(target_n);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

Graph read_graph(std::istream& in) {
    auto next_line = [&](std::string& line) -> bool {
        while (std::getline(in, line)) {
            auto pos = line.find('#');
            if (pos != std::string::npos) line.erase(pos);
            std::istringstream probe(line);
            std::string token;
            if (probe >> token) return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::runtime_error("graph input: missing header");
    std::istringstream header(line);
    int n = 0, m = 0;
    if (!(header >> n >> m)) throw std::runtime_error("graph input: bad header");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line(line)) throw std::runtime_error("graph input: missing edge line");
        std::istringstream edge(line);
        int u = 0, v = 0;
        if (!(edge >> u >> v)) throw std::runtime_error("graph input: bad edge line");
        g.add_edge(u, v);
    }
    return g;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edge_list = g.edges();
    out << g.vertex_count() << ' ' << edge_list.size() << '\n';
    for (auto [u, v] : edge_list) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open graph file for write: " + path);
    write_graph(out, g);
}

Graph lex_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng * nh > 64) throw std::invalid_argument("lex product exceeds 64 vertices");
    Graph out(ng * nh);
    auto id = [nh](int u, int a) { return (u - 1) * nh + a; };
    for (int u = 1; u <= ng; ++u)
        for (int a = 1; a <= nh; ++a)
            for (int v = u; v <= ng; ++v)
                for (int b = 1; b <= nh; ++b) {
                    if (id(u, a) >= id(v, b)) continue;
                    if (g.has_edge(u, v) || (u == v && h.has_edge(a, b))) {
                        out.add_edge(id(u, a), id(v, b));
                    }
                }
    return out;
}

Graph k_fold_power(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = lex_product(g, out);
    return out;
}

namespace {

// Tomita-style max clique with a greedy coloring bound; used on the
// complement for independent sets.
class CliqueSolver {
public:
    CliqueSolver(int n, std::vector<uint64_t> adj) : n_(n), adj_(std::move(adj)) {}

    void solve() {
        uint64_t all = n_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << n_) - 1);
        expand(0, 0, all);
    }

    int best_size() const { return best_; }
    uint64_t best_set() const { return best_set_; }

private:
    void expand(uint64_t cur, int cur_size, uint64_t cand) {
        if (cand == 0) {
            if (cur_size > best_) {
                best_ = cur_size;
                best_set_ = cur;
            }
            return;
        }
        // Greedy coloring of the candidates; color is an upper bound on the
        // clique extension through that vertex.
        std::vector<std::pair<int, int>> seq;  // (vertex, color)
        uint64_t uncolored = cand;
        int color = 0;
        while (uncolored) {
            ++color;
            uint64_t avail = uncolored;
            while (avail) {
                int v = std::countr_zero(avail);
                uint64_t bit = uint64_t{1} << v;
                avail &= ~bit;
                uncolored &= ~bit;
                seq.emplace_back(v, color);
                avail &= ~adj_[v];
            }
        }
        for (int i = static_cast<int>(seq.size()) - 1; i >= 0; --i) {
            auto [v, c] = seq[i];
            if (cur_size + c <= best_) return;
            uint64_t bit = uint64_t{1} << v;
            expand(cur | bit, cur_size + 1, cand & adj_[v]);
            cand &= ~bit;
        }
    }

    int n_;
    std::vector<uint64_t> adj_;
    int best_ = 0;
    uint64_t best_set_ = 0;
};

uint64_t max_independent_set_mask(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    uint64_t all = n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    std::vector<uint64_t> co(n);
    for (int u = 1; u <= n; ++u) {
        co[u - 1] = all & ~g.neighbor_mask(u) & ~(uint64_t{1} << (u - 1));
    }
    CliqueSolver solver(n, std::move(co));
    solver.solve();
    return solver.best_set();
}

class ChiSolver {
public:
    ChiSolver(const Graph& g, int lower, int upper, std::vector<int> incumbent)
        : g_(g),
          n_(g.vertex_count()),
          lower_(lower),
          best_(upper),
          best_coloring_(std::move(incumbent)),
          coloring_(static_cast<size_t>(n_), 0) {}

    void solve() {
        if (n_ == 0 || lower_ >= best_) return;
        // Pre-color a maximum clique; its vertices must all differ anyway.
        uint64_t clique = max_clique_mask();
        int colored = 0;
        uint64_t rest = clique;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            coloring_[v] = ++colored;
        }
        dfs(colored, colored);
    }

    int best() const { return best_; }
    const std::vector<int>& best_coloring() const { return best_coloring_; }

private:
    uint64_t max_clique_mask() const {
        std::vector<uint64_t> adj(n_);
        for (int u = 1; u <= n_; ++u) adj[u - 1] = g_.neighbor_mask(u);
        CliqueSolver solver(n_, std::move(adj));
        solver.solve();
        return solver.best_set();
    }

    void dfs(int colored_count, int used) {
        if (used >= best_) return;
        if (colored_count == n_) {
            best_ = used;
            best_coloring_ = coloring_;
            return;
        }
        int v = pick_vertex();
        uint64_t forbidden = 0;
        uint64_t nbrs = g_.neighbor_mask(v + 1);
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (coloring_[w]) forbidden |= uint64_t{1} << (coloring_[w] - 1);
        }
        int limit = std::min(used + 1, best_ - 1);
        for (int c = 1; c <= limit; ++c) {
            if ((forbidden >> (c - 1)) & 1) continue;
            coloring_[v] = c;
            dfs(colored_count + 1, std::max(used, c));
            coloring_[v] = 0;
            if (lower_ >= best_) return;
        }
    }

    // Max saturation degree, then first fit (lowest index).
    int pick_vertex() const {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (coloring_[v]) continue;
            uint64_t seen = 0;
            int deg = 0;
            uint64_t nbrs = g_.neighbor_mask(v + 1);
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                ++deg;
                if (coloring_[w]) seen |= uint64_t{1} << (coloring_[w] - 1);
            }
            int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        return pick;
    }

    const Graph& g_;
    int n_;
    int lower_;
    int best_;
    std::vector<int> best_coloring_;
    std::vector<int> coloring_;
};

std::vector<int> dsatur_greedy(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> coloring(static_cast<size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (coloring[v]) continue;
            uint64_t seen = 0;
            int deg = 0;
            uint64_t nbrs = g.neighbor_mask(v + 1);
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                ++deg;
                if (coloring[w]) seen |= uint64_t{1} << (coloring[w] - 1);
            }
            int sat = std::popcount(seen);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        uint64_t forbidden = 0;
        uint64_t nbrs = g.neighbor_mask(pick + 1);
        while (nbrs) {
            int w = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            if (coloring[w]) forbidden |= uint64_t{1} << (coloring[w] - 1);
        }
        int c = 1;
        while ((forbidden >> (c - 1)) & 1) ++c;
        coloring[pick] = c;
    }
    return coloring;
}

std::pair<int, std::vector<int>> chi_exact_impl(const Graph& g,
                                                const std::vector<int>* seed) {
    const int n = g.vertex_count();
    if (n == 0) return {0, {}};
    std::vector<int> incumbent = dsatur_greedy(g);
    int upper = color_count(incumbent);
    if (seed != nullptr) {
        if (static_cast<int>(seed->size()) != n || !is_proper_coloring(g, *seed)) {
            throw std::invalid_argument("seed coloring is not a proper coloring");
        }
        if (color_count(*seed) < upper) {
            incumbent = *seed;
            upper = color_count(incumbent);
        }
    }
    uint64_t clique = max_independent_set_mask([&] {
        // max clique of g = max independent set of the complement
        Graph co(n);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (!g.has_edge(u, v)) co.add_edge(u, v);
        return co;
    }());
    int lower = std::popcount(clique);
    if (lower >= upper) return {upper, incumbent};
    ChiSolver solver(g, lower, upper, incumbent);
    solver.solve();
    return {solver.best(), solver.best_coloring()};
}

}  // namespace

int alpha_exact(const Graph& g) {
    return std::popcount(max_independent_set_mask(g));
}

std::vector<int> max_independent_set(const Graph& g) {
    uint64_t mask = max_independent_set_mask(g);
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask) + 1);
        mask &= mask - 1;
    }
    return out;
}

int chi_exact(const Graph& g) { return chi_exact_impl(g, nullptr).first; }

int chi_exact(const Graph& g, const std::vector<int>& seed_coloring) {
    return chi_exact_impl(g, &seed_coloring).first;
}

std::vector<int> optimal_coloring(const Graph& g) {
    return chi_exact_impl(g, nullptr).second;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count()) return false;
    for (int c : coloring)
        if (c < 1) return false;
    for (auto [u, v] : g.edges())
        if (coloring[u - 1] == coloring[v - 1]) return false;
    return true;
}

int color_count(const std::vector<int>& coloring) {
    int m = 0;
    for (int c : coloring) m = std::max(m, c);
    return m;
}

ProductIdentityReport verify_product_identities(const Graph& g, const Graph& h,
                                                bool exact_chi_product) {
    ProductIdentityReport r;
    Graph gh = lex_product(g, h);
    r.alpha_g = alpha_exact(g);
    r.alpha_h = alpha_exact(h);
    r.alpha_gh = alpha_exact(gh);
    r.alpha_ok = (r.alpha_gh == r.alpha_g * r.alpha_h);

    auto [chi_g_val, col_g] = std::pair(chi_exact(g), optimal_coloring(g));
    auto [chi_h_val, col_h] = std::pair(chi_exact(h), optimal_coloring(h));
    r.chi_g = chi_g_val;
    r.chi_h = chi_h_val;
    // The combined coloring of the product is a valid incumbent.
    std::vector<int> seed(static_cast<size_t>(gh.vertex_count()), 0);
    const int nh = h.vertex_count();
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int a = 1; a <= nh; ++a)
            seed[(u - 1) * nh + a - 1] = (col_g[u - 1] - 1) * r.chi_h + col_h[a - 1];
    if (exact_chi_product) {
        r.chi_gh = gh.vertex_count() == 0 ? 0 : chi_exact(gh, seed);
    } else {
        // The product coloring certifies the upper bound without an exact
        // chromatic number; the lower bound is then left unchecked.
        if (!is_proper_coloring(gh, seed))
            throw std::logic_error("product coloring is not proper");
        r.chi_gh = color_count(seed);
    }
    r.chi_upper_ok = (r.chi_gh <= r.chi_g * r.chi_h);
    if (exact_chi_product && g.vertex_count() > 1) {
        r.chi_lower_checked = true;
        double lower = static_cast<double>(r.chi_g) * r.chi_h /
                       std::log2(static_cast<double>(g.vertex_count()));
        r.chi_lower_ok = (static_cast<double>(r.chi_gh) >= lower - 1e-9);
    }
    return r;
}

namespace {

uint64_t canonical_edge_mask(int n, uint64_t mask,
                             const std::vector<std::pair<int, int>>& pairs,
                             std::vector<int>& perm) {
    uint64_t best = ~uint64_t{0};
    std::sort(perm.begin(), perm.end());
    do {
        uint64_t permuted = 0;
        for (size_t e = 0; e < pairs.size(); ++e) {
            if (!((mask >> e) & 1)) continue;
            int u = perm[pairs[e].first], v = perm[pairs[e].second];
            if (u > v) std::swap(u, v);
            // index of pair (u, v) in the same enumeration order
            int idx = 0;
            for (int a = 0; a < u; ++a) idx += n - 1 - a;
            idx += v - u - 1;
            permuted |= uint64_t{1} << idx;
        }
        best = std::min(best, permuted);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumeration supports 1..7 vertices");
    std::vector<std::pair<int, int>> pairs;  // 0-based
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Graph> out;
    const uint64_t total = uint64_t{1} << pairs.size();
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (canonical_edge_mask(n, mask, pairs, perm) != mask) continue;
        Graph g(n);
        for (size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1) g.add_edge(pairs[e].first + 1, pairs[e].second + 1);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> nonisomorphic_graphs_up_to(int n) {
    std::vector<Graph> out;
    for (int i = 1; i <= n; ++i) {
        auto part = nonisomorphic_graphs(i);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace gpr
