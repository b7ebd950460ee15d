#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sigmalab {

/// Immutable simple undirected graph. Adjacency is one bit row per vertex
/// (ceil(n/64) words each), so row operations are word-parallel for any n.
class Graph {
public:
    Graph() = default;  // the graph on zero vertices

    /// Builds a graph from an edge list. Duplicate edges collapse; an
    /// out-of-range endpoint or a loop is rejected with the offending pair.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    /// Builds from raw bit rows (n rows of ceil(n/64) words). Validates
    /// symmetry and an empty diagonal.
    static Graph from_bit_rows(int n, std::vector<std::uint64_t> bits);

    static Graph edgeless(int n);

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const { return degrees_[v]; }
    const std::vector<int>& degrees() const { return degrees_; }
    std::vector<int> degrees_sorted_desc() const;
    int max_degree() const;

    std::vector<int> neighbors(int v) const;

    /// All edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    int words_per_row() const { return words_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    int words_ = 0;
    long long m_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<int> degrees_;

    void allocate(int n);
    void set_edge(int u, int v);
    void finalize();  // computes degrees_ and m_
};

// ---- structural operations ------------------------------------------------

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph k_copies(int k, const Graph& g);
Graph join(const Graph& a, const Graph& b);

/// Appends a vertex with the same neighborhood as v (outside the pair);
/// `adjacent` selects a true twin (edge to v) or a false twin.
Graph add_twin(const Graph& g, int v, bool adjacent);

/// Subgraph induced by `vertices` (no duplicates), relabeled 0..k-1 in
/// increasing order of the original labels.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

/// Relabels: vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// True when u and v have the same neighbors outside {u, v} (true or false
/// twins; adjacency between the pair itself is not constrained).
bool are_twins(const Graph& g, int u, int v);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_co_connected(const Graph& g);

/// Vertex sets of the complement's components, i.e. the partition whose
/// parts pairwise see all cross edges in g.
std::vector<std::vector<int>> anticomponent_vertex_sets(const Graph& g);
std::vector<Graph> anticomponents(const Graph& g);

// ---- named families --------------------------------------------------------

Graph complete(int n);
Graph star(int n);  // K_{1,n-1}; star(1) = K1
Graph path(int n);
Graph cycle(int n);  // n >= 3
Graph complete_bipartite(int r, int s);

enum class SpiderKind { Thin, Thick };

/// Witness partition: stable legs S, clique body C (legs[i] pairs with
/// body[i]), and a head R joined to all of C and none of S.
struct SpiderShape {
    SpiderKind kind;
    std::vector<int> legs;
    std::vector<int> body;
    std::vector<int> head;
    int leg_count() const { return static_cast<int>(legs.size()); }
};

struct SpiderGraph {
    Graph graph;
    SpiderShape shape;
};

/// Spider with k >= 2 legs and the given head graph (may have 0 vertices).
SpiderGraph spider(SpiderKind kind, int k, const Graph& head);

/// True if the shape is a valid spider partition of g.
bool spider_shape_valid(const Graph& g, const SpiderShape& shape);

}  // namespace sigmalab
