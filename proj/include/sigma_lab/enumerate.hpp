#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sigma_lab/graph.hpp"

namespace sigmalab {

/// Canonical labeling key: the lexicographically smallest upper-triangle bit
/// string over all vertex orderings, packed with the (0,1) bit most
/// significant. Equal keys <=> isomorphic graphs. Supports n <= 11.
std::uint64_t canonical_key(const Graph& g);

/// Rebuilds the labeled graph a key describes.
Graph graph_from_key(int n, std::uint64_t key);

/// Emits exactly one representative (canonically labeled, ascending key) per
/// isomorphism class of graphs on exactly n vertices. Supports 1 <= n <= 8;
/// larger corpora should be ingested from graph6 files.
void enumerate_nonisomorphic(int n, const std::function<void(const Graph&)>& sink);
std::vector<Graph> enumerate_all(int n);

/// Streams representatives for every vertex count 1..max_n, smaller counts
/// first, holding only one level of the generation in memory.
class CumulativeEnumerator {
public:
    explicit CumulativeEnumerator(int max_n);
    std::optional<Graph> next();

private:
    int max_n_;
    int current_n_ = 0;
    std::size_t index_ = 0;
    std::vector<std::uint64_t> keys_;
    bool advance_level();
};

}  // namespace sigmalab
