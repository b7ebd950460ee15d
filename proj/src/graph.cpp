#include "sigma_lab/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sigmalab {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

void Graph::allocate(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    n_ = n;
    words_ = n == 0 ? 0 : (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::set_edge(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::finalize() {
    degrees_.assign(n_, 0);
    long long total = 0;
    for (int v = 0; v < n_; ++v) {
        int d = 0;
        const std::uint64_t* r = row(v);
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        degrees_[v] = d;
        total += d;
    }
    m_ = total / 2;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.allocate(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: endpoint out of range in edge " + pair_str(u, v));
        if (u == v)
            throw std::invalid_argument("Graph: loop edge " + pair_str(u, v));
        g.set_edge(u, v);
    }
    g.finalize();
    return g;
}

Graph Graph::from_bit_rows(int n, std::vector<std::uint64_t> bits) {
    Graph g;
    g.allocate(n);
    if (bits.size() != g.bits_.size())
        throw std::invalid_argument("Graph: bit row buffer has wrong size");
    g.bits_ = std::move(bits);
    for (int v = 0; v < n; ++v) {
        if (g.has_edge(v, v)) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(v));
        for (int u = v + 1; u < n; ++u)
            if (g.has_edge(v, u) != g.has_edge(u, v))
                throw std::invalid_argument("Graph: asymmetric adjacency at " + pair_str(v, u));
    }
    g.finalize();
    return g;
}

Graph Graph::edgeless(int n) { return from_edges(n, {}); }

std::vector<int> Graph::degrees_sorted_desc() const {
    std::vector<int> d = degrees_;
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

int Graph::max_degree() const {
    int best = 0;
    for (int d : degrees_) best = std::max(best, d);
    return best;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(degrees_.empty() ? 0 : degrees_[v]);
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
            const int bit = std::countr_zero(word);
            out.push_back(w * 64 + bit);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

// ---- structural operations ------------------------------------------------

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    const int words = n == 0 ? 0 : (n + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(n) * words, 0);
    const std::uint64_t tail_mask =
        (n & 63) ? ((std::uint64_t{1} << (n & 63)) - 1) : ~std::uint64_t{0};
    for (int v = 0; v < n; ++v) {
        const std::uint64_t* r = g.row(v);
        std::uint64_t* out = bits.data() + static_cast<std::size_t>(v) * words;
        for (int w = 0; w < words; ++w) out[w] = ~r[w];
        out[words - 1] &= tail_mask;
        out[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    return Graph::from_bit_rows(n, std::move(bits));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    edges.reserve(edges.size() + static_cast<std::size_t>(b.edge_count()));
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    return Graph::from_edges(na + b.vertex_count(), edges);
}

Graph k_copies(int k, const Graph& g) {
    if (k < 0) throw std::invalid_argument("k_copies: negative count");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(k) * g.edge_count());
    const auto base = g.edges();
    for (int c = 0; c < k; ++c)
        for (const auto& [u, v] : base) edges.emplace_back(u + c * n, v + c * n);
    return Graph::from_edges(k * n, edges);
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    edges.reserve(edges.size() + static_cast<std::size_t>(b.edge_count()) +
                  static_cast<std::size_t>(na) * nb);
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
    return Graph::from_edges(na + nb, edges);
}

Graph add_twin(const Graph& g, int v, bool adjacent) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("add_twin: invalid vertex " + std::to_string(v));
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int u : g.neighbors(v))
        if (u != v) edges.emplace_back(n, u);
    if (adjacent) edges.emplace_back(n, v);
    return Graph::from_edges(n + 1, edges);
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    const int k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i) {
        if (vertices[i] < 0 || vertices[i] >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: invalid vertex " + std::to_string(vertices[i]));
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw std::invalid_argument("induced_subgraph: duplicate vertex " + std::to_string(vertices[i]));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(vertices[i], vertices[j])) edges.emplace_back(i, j);
    return Graph::from_edges(k, edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: wrong permutation size");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw std::invalid_argument("relabel: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(n, edges);
}

bool are_twins(const Graph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw std::invalid_argument("are_twins: invalid vertex pair " + pair_str(u, v));
    const int words = g.words_per_row();
    const std::uint64_t* ru = g.row(u);
    const std::uint64_t* rv = g.row(v);
    for (int w = 0; w < words; ++w) {
        std::uint64_t mask = ~std::uint64_t{0};
        if (w == (u >> 6)) mask &= ~(std::uint64_t{1} << (u & 63));
        if (w == (v >> 6)) mask &= ~(std::uint64_t{1} << (v & 63));
        if ((ru[w] & mask) != (rv[w] & mask)) return false;
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> visited(n, 0);
    std::vector<std::vector<int>> comps;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (visited[s]) continue;
        visited[s] = 1;
        stack.assign(1, s);
        std::vector<int> comp;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!visited[u]) {
                    visited[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_co_connected(const Graph& g) { return is_connected(complement(g)); }

std::vector<std::vector<int>> anticomponent_vertex_sets(const Graph& g) {
    return connected_components(complement(g));
}

std::vector<Graph> anticomponents(const Graph& g) {
    std::vector<Graph> parts;
    for (const auto& set : anticomponent_vertex_sets(g)) parts.push_back(induced_subgraph(g, set));
    return parts;
}

// ---- named families --------------------------------------------------------

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph star(int n) {
    if (n < 1) throw std::invalid_argument("star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("complete_bipartite: need r, s >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < r; ++u)
        for (int v = 0; v < s; ++v) edges.emplace_back(u, r + v);
    return Graph::from_edges(r + s, edges);
}

SpiderGraph spider(SpiderKind kind, int k, const Graph& head) {
    if (k < 2) throw std::invalid_argument("spider: need k >= 2");
    const int nh = head.vertex_count();
    const int n = 2 * k + nh;
    std::vector<std::pair<int, int>> edges;
    // legs 0..k-1, body k..2k-1, head 2k..
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(k + i, k + j);
    for (int i = 0; i < k; ++i) {
        if (kind == SpiderKind::Thin) {
            edges.emplace_back(i, k + i);
        } else {
            for (int j = 0; j < k; ++j)
                if (j != i) edges.emplace_back(i, k + j);
        }
    }
    for (int i = 0; i < k; ++i)
        for (int h = 0; h < nh; ++h) edges.emplace_back(k + i, 2 * k + h);
    for (const auto& [u, v] : head.edges()) edges.emplace_back(2 * k + u, 2 * k + v);

    SpiderShape shape;
    shape.kind = kind;
    for (int i = 0; i < k; ++i) shape.legs.push_back(i);
    for (int i = 0; i < k; ++i) shape.body.push_back(k + i);
    for (int h = 0; h < nh; ++h) shape.head.push_back(2 * k + h);
    return SpiderGraph{Graph::from_edges(n, edges), std::move(shape)};
}

bool spider_shape_valid(const Graph& g, const SpiderShape& shape) {
    const int n = g.vertex_count();
    const int k = shape.leg_count();
    if (k < 2 || static_cast<int>(shape.body.size()) != k) return false;
    if (k + k + static_cast<int>(shape.head.size()) != n) return false;

    std::vector<int> role(n, -1);  // 0 = leg, 1 = body, 2 = head
    auto assign = [&](const std::vector<int>& part, int r) {
        for (int v : part) {
            if (v < 0 || v >= n || role[v] != -1) return false;
            role[v] = r;
        }
        return true;
    };
    if (!assign(shape.legs, 0) || !assign(shape.body, 1) || !assign(shape.head, 2)) return false;

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (g.has_edge(shape.legs[i], shape.legs[j])) return false;  // S stable
            if (!g.has_edge(shape.body[i], shape.body[j])) return false;  // C clique
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const bool want = (shape.kind == SpiderKind::Thin) ? (i == j) : (i != j);
            if (g.has_edge(shape.legs[i], shape.body[j]) != want) return false;
        }
    for (int h : shape.head) {
        for (int c : shape.body)
            if (!g.has_edge(h, c)) return false;
        for (int s : shape.legs)
            if (g.has_edge(h, s)) return false;
    }
    return true;
}

}  // namespace sigmalab
