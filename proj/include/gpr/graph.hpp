#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gpr {

// Undirected simple graph on vertices 1..n, n <= 64.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    // 0-based bitmask of the neighbors of u.
    uint64_t neighbor_mask(int u) const;

    // Edge list with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int u) const;

    int n_ = 0;
    std::vector<uint64_t> adj_;
};

Graph edgeless_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

// Adds isolated vertices until the vertex count reaches target_n.
Graph pad_with_isolated(const Graph& g, int target_n);

// Erdos-Renyi G(n, p) with a caller-owned generator.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Text format: optional '#' comment lines, a "n m" header, then m "u v" lines.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Lexicographic product: vertex (u,a) has index (u-1)*|V(h)|+a; edge between
// (u,a) and (v,b) iff uv in E(g), or u=v and ab in E(h).
Graph lex_product(const Graph& g, const Graph& h);

// k-fold lexicographic power, g^1 = g.
Graph k_fold_power(const Graph& g, int k);

// Exact maximum independent set via branch and bound (clique search on the
// complement with a greedy coloring bound). Returns size; witness variant
// returns a sorted 1-based vertex list.
int alpha_exact(const Graph& g);
std::vector<int> max_independent_set(const Graph& g);

// Exact chromatic number: DSATUR-seeded branch and bound, first-fit
// tie-break. Optional seed coloring provides the initial incumbent.
int chi_exact(const Graph& g);
int chi_exact(const Graph& g, const std::vector<int>& seed_coloring);

// A chi_exact-optimal proper coloring, colors 1..chi, indexed by vertex-1.
std::vector<int> optimal_coloring(const Graph& g);

bool is_proper_coloring(const Graph& g, const std::vector<int>& coloring);
int color_count(const std::vector<int>& coloring);

struct ProductIdentityReport {
    int alpha_g = 0, alpha_h = 0, alpha_gh = 0;
    int chi_g = 0, chi_h = 0, chi_gh = 0;
    bool alpha_ok = false;
    bool chi_upper_ok = false;
    bool chi_lower_checked = false;
    bool chi_lower_ok = false;

    bool ok() const {
        return alpha_ok && chi_upper_ok && (!chi_lower_checked || chi_lower_ok);
    }
};

// Checks alpha(g.h) = alpha(g)*alpha(h) and
// chi(g)*chi(h)/log2|V(g)| <= chi(g.h) <= chi(g)*chi(h).
// The lower bound is skipped when |V(g)| = 1 (log2 1 = 0). With
// exact_chi_product = false, chi(g.h) is replaced by the product coloring
// upper bound and the lower bound is not checked.
ProductIdentityReport verify_product_identities(const Graph& g, const Graph& h,
                                                bool exact_chi_product = true);

// All non-isomorphic graphs on exactly n (resp. 1..n) vertices, n <= 7.
std::vector<Graph> nonisomorphic_graphs(int n);
std::vector<Graph> nonisomorphic_graphs_up_to(int n);

}  // namespace gpr
