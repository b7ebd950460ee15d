#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sigma_lab/classes.hpp"
#include "sigma_lab/enumerate.hpp"

using namespace sigmalab;

namespace {

std::vector<Graph> corpus_up_to(int max_n) {
    std::vector<Graph> all;
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : enumerate_all(n)) all.push_back(g);
    return all;
}

// independent split check: no induced 2K2, C4, or C5
bool split_by_forbidden_subgraphs(const Graph& g) {
    if (!is_pseudo_split(g)) return false;  // 2K2 or C4 found
    const int n = g.vertex_count();
    std::vector<int> idx(5);
    for (idx[0] = 0; idx[0] < n; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < n; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < n; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < n; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < n; ++idx[4]) {
                        const Graph h = induced_subgraph(g, idx);
                        bool all_two = h.edge_count() == 5;
                        for (int v = 0; v < 5 && all_two; ++v)
                            if (h.degree(v) != 2) all_two = false;
                        if (all_two && is_connected(h)) return false;  // induced C5
                    }
    return true;
}

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("forests, trees, diameter") {
    CHECK(is_tree(star(6)));
    CHECK(diameter(star(6)) == 2);
    CHECK(diameter(star(2)) == 1);
    CHECK(!is_forest(cycle(5)));
    CHECK(is_forest(disjoint_union(path(3), path(2))));
    CHECK(!is_tree(disjoint_union(path(3), path(2))));
    CHECK(diameter(path(5)) == 4);
    CHECK(diameter(complete(1)) == 0);
    CHECK(!diameter(Graph::edgeless(2)).has_value());
    CHECK_THROWS_AS(diameter(Graph()), std::invalid_argument);
}

TEST_CASE("conjecture shapes") {
    const auto accepted = conjecture_form(disjoint_union(star(4), Graph::edgeless(1)));
    REQUIRE(accepted.has_value());
    CHECK(accepted->variant == ConjectureVariant::StarPlusIsolated);
    CHECK(accepted->r == 3);
    CHECK(accepted->s == 1);

    // shape matches but the size constraint fails
    const Graph tight = disjoint_union(star(4), Graph::edgeless(2));
    CHECK(!conjecture_form(tight).has_value());
    const auto raw = raw_shape(tight);
    REQUIRE(raw.has_value());
    CHECK(raw->r == 3);
    CHECK(raw->s == 2);
    CHECK(!raw->size_constraint_ok);

    CHECK(!conjecture_form(cycle(4)).has_value());
    CHECK(conjecture_form(complete(1))->variant == ConjectureVariant::K1);
    const auto k2s = conjecture_form(disjoint_union(complete(2), Graph::edgeless(5)));
    REQUIRE(k2s.has_value());
    CHECK(k2s->variant == ConjectureVariant::K2PlusIsolated);
    CHECK(k2s->s == 5);
    CHECK(conjecture_form(star(7))->s == 0);
    CHECK(!raw_shape(Graph::edgeless(3)).has_value());
    CHECK(!raw_shape(disjoint_union(path(3), path(3))).has_value());
}

TEST_CASE("split recognition") {
    const auto sp = is_split(star(5));
    REQUIRE(sp.has_value());
    CHECK(sp->clique.size() == 2);  // center plus one leaf
    CHECK(!is_split(cycle(4)).has_value());
    CHECK(!is_split(cycle(5)).has_value());
    CHECK(!is_split(k_copies(2, complete(2))).has_value());

    for (const Graph& g : corpus_up_to(6)) {
        const auto witness = is_split(g);
        CHECK(witness.has_value() == split_by_forbidden_subgraphs(g));
        if (!witness) continue;
        // witness sanity: partition, clique, stable, and maximality
        CHECK(witness->clique.size() + witness->stable.size() ==
              static_cast<std::size_t>(g.vertex_count()));
        for (int s : witness->stable) {
            bool adjacent_to_all = !witness->clique.empty();
            for (int c : witness->clique)
                if (!g.has_edge(s, c)) adjacent_to_all = false;
            CHECK(!adjacent_to_all);
        }
    }
}

TEST_CASE("pseudo-split") {
    CHECK(is_pseudo_split(cycle(5)));
    CHECK(!is_pseudo_split(k_copies(2, complete(2))));
    CHECK(!is_pseudo_split(cycle(4)));
    for (const Graph& g : corpus_up_to(6))
        if (is_split(g)) CHECK(is_pseudo_split(g));
}

TEST_CASE("cographs, two routes") {
    CHECK(!is_cograph(path(4)));
    CHECK(is_cograph(complete_bipartite(3, 4)));
    CHECK(!is_cograph(path(5)));
    CHECK(is_cograph(complete(1)));
    for (const Graph& g : corpus_up_to(6)) CHECK(is_cograph(g) == !has_induced_p4(g));
}

TEST_CASE("induced P4 counting") {
    CHECK(count_induced_p4(path(4)) == 1);
    CHECK(count_induced_p4(cycle(5)) == 5);
    CHECK(count_induced_p4(complete(4)) == 0);
    CHECK(count_induced_p4(path(6)) == 3);
    CHECK(count_induced_p4(Graph::edgeless(6)) == 0);
}

TEST_CASE("extended P4-laden") {
    CHECK(is_extended_p4_laden(cycle(5)));
    CHECK(!is_extended_p4_laden(path(6)));
    for (const Graph& g : corpus_up_to(6)) {
        if (is_split(g)) CHECK(is_extended_p4_laden(g));
        if (is_cograph(g)) CHECK(is_extended_p4_laden(g));
        if (is_pseudo_split(g)) CHECK(is_extended_p4_laden(g));
    }
}

TEST_CASE("spider recognition") {
    for (const SpiderKind kind : {SpiderKind::Thin, SpiderKind::Thick}) {
        for (int k = 2; k <= 4; ++k) {
            for (const Graph& head : {Graph(), complete(1), path(3)}) {
                const auto made = spider(kind, k, head);
                const auto found = recognize_spider(made.graph);
                REQUIRE(found.has_value());
                CHECK(spider_shape_valid(made.graph, *found));
                CHECK(found->leg_count() == k);
                if (k == 2)
                    CHECK(found->kind == SpiderKind::Thin);  // the k=2 shapes coincide
                else
                    CHECK(found->kind == kind);
            }
        }
    }

    const auto p4_shape = recognize_spider(path(4));
    REQUIRE(p4_shape.has_value());
    CHECK(p4_shape->kind == SpiderKind::Thin);
    CHECK(p4_shape->leg_count() == 2);
    CHECK(p4_shape->head.empty());

    CHECK(!recognize_spider(complete(4)).has_value());
    CHECK(!recognize_spider(cycle(5)).has_value());
    CHECK(!recognize_spider(k_copies(2, complete(2))).has_value());
    CHECK(!recognize_spider(star(5)).has_value());
}

TEST_CASE("complete bipartite recognition") {
    CHECK(is_complete_bipartite(star(6)) == std::make_pair(1, 5));
    CHECK(is_complete_bipartite(cycle(4)) == std::make_pair(2, 2));
    CHECK(!is_complete_bipartite(path(4)).has_value());
    CHECK(!is_complete_bipartite(complete(3)).has_value());
    CHECK(!is_complete_bipartite(complete(1)).has_value());
}

TEST_CASE("recognizers are isomorphism invariant") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 7;
        const Graph g = random_graph(rng, n);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);

        CHECK(is_forest(g) == is_forest(h));
        CHECK(is_split(g).has_value() == is_split(h).has_value());
        CHECK(is_pseudo_split(g) == is_pseudo_split(h));
        CHECK(is_cograph(g) == is_cograph(h));
        CHECK(count_induced_p4(g) == count_induced_p4(h));
        CHECK(is_extended_p4_laden(g) == is_extended_p4_laden(h));
        CHECK(recognize_spider(g).has_value() == recognize_spider(h).has_value());
        CHECK(is_complete_bipartite(g) == is_complete_bipartite(h));
        CHECK(conjecture_form(g).has_value() == conjecture_form(h).has_value());
    }
}
