#include "sigma_lab/classes.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace sigmalab {

namespace {

// Induced subgraph classification on a 4-subset, from its 6 adjacency bits.
struct FourSubset {
    int edge_count = 0;
    std::array<int, 4> deg{};
};

FourSubset probe4(const Graph& g, int a, int b, int c, int d) {
    const std::array<int, 4> v{a, b, c, d};
    FourSubset r;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(v[i], v[j])) {
                ++r.edge_count;
                ++r.deg[i];
                ++r.deg[j];
            }
    return r;
}

bool is_p4_subset(const FourSubset& f) {
    if (f.edge_count != 3) return false;
    int ones = 0, twos = 0;
    for (int d : f.deg) {
        if (d == 1) ++ones;
        if (d == 2) ++twos;
    }
    return ones == 2 && twos == 2;
}

bool is_2k2_subset(const FourSubset& f) {
    return f.edge_count == 2 && f.deg[0] == 1 && f.deg[1] == 1 && f.deg[2] == 1 && f.deg[3] == 1;
}

bool is_c4_subset(const FourSubset& f) {
    return f.edge_count == 4 && f.deg[0] == 2 && f.deg[1] == 2 && f.deg[2] == 2 && f.deg[3] == 2;
}

template <typename Fn>
bool any_4subset(const Graph& g, Fn&& pred) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (pred(probe4(g, a, b, c, d))) return true;
    return false;
}

// Visits all k-subsets of 0..n-1.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& visit) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_forest(const Graph& g) {
    return g.edge_count() ==
           g.vertex_count() - static_cast<long long>(connected_components(g).size());
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) return false;
    if (n == 1) return true;
    return g.edge_count() == n - 1 && g.max_degree() == n - 1;
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("diameter: graph must have at least one vertex");
    int best = 0;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (int u : g.neighbors(v))
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    best = std::max(best, dist[u]);
                    queue.push_back(u);
                }
        }
        if (static_cast<int>(queue.size()) != n) return std::nullopt;
    }
    return best;
}

std::optional<ConjectureForm> raw_shape(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) return std::nullopt;
    if (n == 1) return ConjectureForm{ConjectureVariant::K1, 0, 0, true};

    const auto comps = connected_components(g);
    int star_index = -1;
    int isolated = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].size() == 1) {
            ++isolated;
        } else if (star_index < 0) {
            star_index = static_cast<int>(i);
        } else {
            return std::nullopt;  // two nontrivial components
        }
    }
    if (star_index < 0) return std::nullopt;  // edgeless on n >= 2 vertices

    const Graph h = induced_subgraph(g, comps[star_index]);
    if (!is_star(h)) return std::nullopt;
    const int r = h.vertex_count() - 1;
    if (r == 1) return ConjectureForm{ConjectureVariant::K2PlusIsolated, 1, isolated, true};
    return ConjectureForm{ConjectureVariant::StarPlusIsolated, r, isolated, isolated < r - 1};
}

std::optional<ConjectureForm> conjecture_form(const Graph& g) {
    auto form = raw_shape(g);
    if (form && form->size_constraint_ok) return form;
    return std::nullopt;
}

std::optional<SplitPartition> is_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) h = i;

    long long top = 0, rest = 0;
    for (int i = 0; i < n; ++i) {
        if (i < h)
            top += g.degree(order[i]);
        else
            rest += g.degree(order[i]);
    }
    if (static_cast<long long>(h) * (h - 1) - top + rest != 0) return std::nullopt;

    std::vector<int> clique(order.begin(), order.begin() + h);
    std::vector<int> stable(order.begin() + h, order.end());

    // The splittance witness need not use a maximal clique; absorb any stable
    // vertex adjacent to all of it.
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < stable.size(); ++i) {
            const int s = stable[i];
            bool full = true;
            for (int c : clique)
                if (!g.has_edge(s, c)) {
                    full = false;
                    break;
                }
            if (full) {
                clique.push_back(s);
                stable.erase(stable.begin() + i);
                moved = true;
                break;
            }
        }
    }

    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            if (!g.has_edge(clique[i], clique[j]))
                throw std::logic_error("is_split: splittance witness is not a clique");
    for (std::size_t i = 0; i < stable.size(); ++i)
        for (std::size_t j = i + 1; j < stable.size(); ++j)
            if (g.has_edge(stable[i], stable[j]))
                throw std::logic_error("is_split: splittance witness is not stable");

    std::sort(clique.begin(), clique.end());
    std::sort(stable.begin(), stable.end());
    return SplitPartition{std::move(clique), std::move(stable)};
}

bool is_pseudo_split(const Graph& g) {
    return !any_4subset(g, [](const FourSubset& f) { return is_2k2_subset(f) || is_c4_subset(f); });
}

bool is_cograph(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto& comp : comps)
            if (!is_cograph(induced_subgraph(g, comp))) return false;
        return true;
    }
    const auto anti = anticomponent_vertex_sets(g);
    if (anti.size() > 1) {
        for (const auto& part : anti)
            if (!is_cograph(induced_subgraph(g, part))) return false;
        return true;
    }
    return false;  // nontrivial, connected, and co-connected
}

bool has_induced_p4(const Graph& g) {
    return any_4subset(g, [](const FourSubset& f) { return is_p4_subset(f); });
}

long long count_induced_p4(const Graph& g) {
    long long count = 0;
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (is_p4_subset(probe4(g, a, b, c, d))) ++count;
    return count;
}

bool is_extended_p4_laden(const Graph& g) {
    const int n = g.vertex_count();
    bool ok = true;
    for (int k = 5; k <= 6 && ok; ++k) {  // subsets of size <= 4 hold at most one P4
        if (k > n) break;
        for_each_subset(n, k, [&](const std::vector<int>& idx) {
            if (!ok) return;
            const Graph h = induced_subgraph(g, idx);
            if (count_induced_p4(h) > 2 && !is_pseudo_split(h)) ok = false;
        });
    }
    return ok;
}

std::optional<SpiderShape> recognize_spider(const Graph& g) {
    const int n = g.vertex_count();

    // Thin: the legs are exactly the degree-1 vertices, each attached to a
    // distinct body vertex.
    {
        std::vector<int> legs;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) legs.push_back(v);
        const int k = static_cast<int>(legs.size());
        if (k >= 2 && 2 * k <= n) {
            std::vector<char> taken(n, 0);
            for (int s : legs) taken[s] = 1;
            std::vector<int> body;
            bool ok = true;
            for (int s : legs) {
                const int c = g.neighbors(s)[0];
                if (taken[c]) {
                    ok = false;
                    break;
                }
                taken[c] = 1;
                body.push_back(c);
            }
            if (ok) {
                std::vector<int> head;
                for (int v = 0; v < n; ++v)
                    if (!taken[v]) head.push_back(v);
                SpiderShape shape{SpiderKind::Thin, legs, body, head};
                if (spider_shape_valid(g, shape)) return shape;
            }
        }
    }

    // Thick with k >= 3: the legs are exactly the degree-(k-1) vertices and
    // the body is the union of their neighborhoods.
    for (int k = 3; 2 * k <= n; ++k) {
        std::vector<int> legs;
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == k - 1) legs.push_back(v);
        if (static_cast<int>(legs.size()) != k) continue;

        std::vector<char> in_body(n, 0), in_leg(n, 0);
        for (int s : legs) in_leg[s] = 1;
        std::vector<int> body_set;
        for (int s : legs)
            for (int u : g.neighbors(s))
                if (!in_leg[u] && !in_body[u]) {
                    in_body[u] = 1;
                    body_set.push_back(u);
                }
        if (static_cast<int>(body_set.size()) != k) continue;

        // Pair leg i with the unique body vertex it misses.
        std::vector<int> body(k, -1);
        std::vector<char> used(n, 0);
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int missing = -1;
            for (int c : body_set)
                if (!g.has_edge(legs[i], c)) {
                    if (missing != -1) {
                        ok = false;
                        break;
                    }
                    missing = c;
                }
            if (missing < 0 || used[missing]) ok = false;
            if (ok) {
                used[missing] = 1;
                body[i] = missing;
            }
        }
        if (!ok) continue;

        std::vector<int> head;
        for (int v = 0; v < n; ++v)
            if (!in_leg[v] && !in_body[v]) head.push_back(v);
        SpiderShape shape{SpiderKind::Thick, legs, body, head};
        if (spider_shape_valid(g, shape)) return shape;
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g) {
    const auto parts = anticomponent_vertex_sets(g);
    if (parts.size() != 2) return std::nullopt;
    for (const auto& part : parts)
        if (induced_subgraph(g, part).edge_count() != 0) return std::nullopt;
    const int r = static_cast<int>(parts[0].size());
    const int s = static_cast<int>(parts[1].size());
    return std::make_pair(std::min(r, s), std::max(r, s));
}

}  // namespace sigmalab
