#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigma_lab/graph.hpp"

namespace sigmalab {

bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// K1 or a tree with a universal vertex.
bool is_star(const Graph& g);

/// Max shortest-path distance; nullopt when disconnected. Requires n >= 1.
std::optional<int> diameter(const Graph& g);

enum class ConjectureVariant { K1, K2PlusIsolated, StarPlusIsolated };

/// A graph of the shape K1, K2 + sK1, or K_{1,r} + sK1. The conjectured
/// sigma=1 family additionally requires s < r - 1 for the star variant;
/// `size_constraint_ok` records whether that holds.
struct ConjectureForm {
    ConjectureVariant variant;
    int r = 0;  // star leaf count (1 for the K2 variant)
    int s = 0;  // isolated vertices
    bool size_constraint_ok = true;
};

/// Shape match ignoring the s < r - 1 constraint (the flag is still filled).
std::optional<ConjectureForm> raw_shape(const Graph& g);

/// Shape match enforcing the constraint: non-nullopt exactly on the
/// conjectured sigma=1 family.
std::optional<ConjectureForm> conjecture_form(const Graph& g);

struct SplitPartition {
    std::vector<int> clique;
    std::vector<int> stable;
};

/// Split recognition via the degree-sequence splittance criterion. The
/// returned clique is post-processed to a maximal one.
std::optional<SplitPartition> is_split(const Graph& g);

/// No induced 2K2 and no induced C4.
bool is_pseudo_split(const Graph& g);

/// Recursive route: every induced subgraph on >= 2 vertices is disconnected
/// or co-disconnected.
bool is_cograph(const Graph& g);

/// Independent route: direct search for an induced P4.
bool has_induced_p4(const Graph& g);

/// Number of 4-vertex subsets inducing a P4.
long long count_induced_p4(const Graph& g);

/// Every induced subgraph on at most six vertices with more than two induced
/// P4s is pseudo-split. Checked by direct subset enumeration.
bool is_extended_p4_laden(const Graph& g);

/// Finds a spider partition witness if one exists. The degenerate k=2 thick
/// shape coincides with the thin one and is reported as thin.
std::optional<SpiderShape> recognize_spider(const Graph& g);

/// (r, s) with r <= s when g is K_{r,s}; nullopt otherwise.
std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g);

}  // namespace sigmalab
