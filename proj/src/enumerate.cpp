#include "sigma_lab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace sigmalab {

namespace {

constexpr int kMaxCanonical = 11;  // C(11,2) = 55 bits fit a key
constexpr int kMaxEnumerate = 8;

using AdjMasks = std::array<std::uint16_t, kMaxCanonical>;

struct CanonicalSearch {
    int n = 0;
    int total_bits = 0;
    const AdjMasks* adj = nullptr;
    std::uint64_t best = 0;
    std::array<int, kMaxCanonical> placed{};
    // twins[u] & (1 << v): u and v interchangeable (equal rows outside the pair)
    std::array<std::uint16_t, kMaxCanonical> twins{};

    // Appends the column bits for placing each unused vertex at `level`,
    // pruning any branch whose partial string already exceeds the matching
    // prefix of the best complete string found so far.
    void dfs(int level, std::uint16_t used, std::uint64_t current) {
        if (level == n) {
            if (current < best) best = current;
            return;
        }
        struct Candidate {
            std::uint64_t chunk;
            int vertex;
        };
        std::array<Candidate, kMaxCanonical> cands;
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (std::uint16_t{1} << v)) continue;
            std::uint64_t chunk = 0;
            for (int i = 0; i < level; ++i)
                chunk |= static_cast<std::uint64_t>(((*adj)[v] >> placed[i]) & 1u)
                         << (level - 1 - i);
            cands[count++] = {chunk, v};
        }
        std::sort(cands.begin(), cands.begin() + count,
                  [](const Candidate& a, const Candidate& b) {
                      return a.chunk != b.chunk ? a.chunk < b.chunk : a.vertex < b.vertex;
                  });

        const int fixed_bits = (level + 1) * level / 2;  // C(level+1, 2)
        std::uint16_t tried = 0;
        for (int ci = 0; ci < count; ++ci) {
            const auto [chunk, v] = cands[ci];
            if (twins[v] & tried) continue;  // an interchangeable vertex was already tried
            const std::uint64_t next = (current << level) | chunk;
            if (next > (best >> (total_bits - fixed_bits)))
                break;  // candidates are sorted; the rest only grow
            tried |= std::uint16_t{1} << v;
            placed[level] = v;
            dfs(level + 1, static_cast<std::uint16_t>(used | (std::uint16_t{1} << v)), next);
        }
    }
};

std::uint64_t identity_key(int n, const AdjMasks& adj) {
    std::uint64_t key = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) key = (key << 1) | ((adj[i] >> j) & 1u);
    return key;
}

std::uint64_t canonical_key_masks(int n, const AdjMasks& adj) {
    if (n <= 1) return 0;
    CanonicalSearch search;
    search.n = n;
    search.total_bits = n * (n - 1) / 2;
    search.adj = &adj;
    search.best = identity_key(n, adj);
    for (int u = 0; u < n; ++u) {
        search.twins[u] = 0;
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            const std::uint16_t mask =
                static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
            if ((adj[u] & mask) == (adj[v] & mask)) search.twins[u] |= std::uint16_t{1} << v;
        }
    }
    search.dfs(0, 0, 0);
    return search.best;
}

AdjMasks masks_from_key(int n, std::uint64_t key) {
    AdjMasks adj{};
    int shift = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --shift;
            if ((key >> shift) & 1u) {
                adj[i] |= std::uint16_t{1} << j;
                adj[j] |= std::uint16_t{1} << i;
            }
        }
    return adj;
}

// One canonical key per isomorphism class on exactly n vertices, built by
// extending the previous level with every possible new-vertex neighborhood.
std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& prev, int n) {
    std::unordered_set<std::uint64_t> seen;
    for (const std::uint64_t base_key : prev) {
        AdjMasks base = masks_from_key(n - 1, base_key);
        const int v = n - 1;
        for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
            AdjMasks adj = base;
            adj[v] = static_cast<std::uint16_t>(nbrs);
            for (int u = 0; u < v; ++u)
                if ((nbrs >> u) & 1u) adj[u] |= std::uint16_t{1} << v;
            seen.insert(canonical_key_masks(n, adj));
        }
    }
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCanonical)
        throw std::invalid_argument("canonical_key: supported only for n <= " +
                                    std::to_string(kMaxCanonical));
    AdjMasks adj{};
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= std::uint16_t{1} << u;
    return canonical_key_masks(n, adj);
}

Graph graph_from_key(int n, std::uint64_t key) {
    std::vector<std::pair<int, int>> edges;
    int shift = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --shift;
            if ((key >> shift) & 1u) edges.emplace_back(i, j);
        }
    return Graph::from_edges(n, edges);
}

void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& sink) {
    if (n < 1 || n > kMaxEnumerate)
        throw std::invalid_argument(
            "enumerate_nonisomorphic: built-in enumeration supports 1 <= n <= " +
            std::to_string(kMaxEnumerate) + "; ingest a graph6 file for larger corpora");
    std::vector<std::uint64_t> keys{0};  // level 1: K1
    for (int level = 2; level <= n; ++level) keys = extend_level(keys, level);
    for (const std::uint64_t key : keys) sink(graph_from_key(n, key));
}

std::vector<Graph> enumerate_all(int n) {
    std::vector<Graph> out;
    enumerate_nonisomorphic(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

CumulativeEnumerator::CumulativeEnumerator(int max_n) : max_n_(max_n) {
    if (max_n < 1 || max_n > kMaxEnumerate)
        throw std::invalid_argument(
            "enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerate) +
            "; ingest a graph6 file for larger corpora");
}

bool CumulativeEnumerator::advance_level() {
    if (current_n_ >= max_n_) return false;
    ++current_n_;
    keys_ = current_n_ == 1 ? std::vector<std::uint64_t>{0} : extend_level(keys_, current_n_);
    index_ = 0;
    return true;
}

std::optional<Graph> CumulativeEnumerator::next() {
    while (index_ >= keys_.size() || current_n_ == 0) {
        if (!advance_level()) return std::nullopt;
    }
    return graph_from_key(current_n_, keys_[index_++]);
}

}  // namespace sigmalab
