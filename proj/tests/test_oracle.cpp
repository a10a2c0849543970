#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "splitdyn/graph.hpp"
#include "splitdyn/oracle.hpp"

using namespace splitdyn;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (coin(rng)) g.toggle_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("brute and degree-sequence splittance agree") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 12;
        Graph g = random_graph(n, 0.1 + 0.08 * (trial % 10), rng);
        REQUIRE(oracle::brute_splittance(g) == oracle::ladder_splittance(g));
    }
}

TEST_CASE("splittance zero iff no obstruction") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(4 + trial % 8, 0.4, rng);
        bool split = oracle::brute_splittance(g) == 0;
        REQUIRE(split == oracle::brute_obstructions(g).empty());
    }
}

TEST_CASE("known splittance values") {
    Graph c4(4);
    c4.toggle_edge(1, 2);
    c4.toggle_edge(2, 3);
    c4.toggle_edge(3, 4);
    c4.toggle_edge(4, 1);
    REQUIRE(oracle::brute_splittance(c4) == 1);

    Graph c5(5);
    for (int i = 1; i <= 5; ++i) c5.toggle_edge(i, i % 5 + 1);
    REQUIRE(oracle::brute_splittance(c5) == 2);

    Graph two_k2(4);
    two_k2.toggle_edge(1, 2);
    two_k2.toggle_edge(3, 4);
    REQUIRE(oracle::brute_splittance(two_k2) == 1);

    Graph edgeless(6);
    REQUIRE(oracle::brute_splittance(edgeless) == 0);
}

namespace {

// Independent answer by trying every insertion set of size <= k.
bool exhaustive_completion(const Graph& g, int k) {
    EdgeList non_edges;
    for (Vertex u = 1; u <= g.size(); ++u)
        for (Vertex v = u + 1; v <= g.size(); ++v)
            if (!g.has_edge(u, v)) non_edges.push_back({u, v});
    int m = static_cast<int>(non_edges.size());
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        if (std::popcount(mask) > k) continue;
        Graph h = g;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) h.toggle_edge(non_edges[i].first, non_edges[i].second);
        if (oracle::brute_splittance(h) == 0) return true;
    }
    return false;
}

} // namespace

TEST_CASE("completion matches exhaustive subset search") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(5 + trial % 2, 0.35, rng);
        int k = trial % 3;
        auto ans = oracle::brute_completion(g, k);
        REQUIRE(ans.yes == exhaustive_completion(g, k));
        if (ans.yes) {
            REQUIRE(static_cast<int>(ans.witness.size()) <= k);
            Graph h = g;
            for (auto [u, v] : ans.witness) REQUIRE(h.toggle_edge(u, v));
            REQUIRE(oracle::brute_splittance(h) == 0);
        }
    }
}

TEST_CASE("deletion answers via exhaustive cross-check") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(5 + trial % 3, 0.5, rng);
        int k = trial % 3;
        auto ans = oracle::brute_deletion(g, k);
        if (ans.yes) {
            Graph h = g;
            for (auto [u, v] : ans.witness) REQUIRE_FALSE(h.toggle_edge(u, v));
            REQUIRE(oracle::brute_obstructions(h).empty());
        }
    }
}

TEST_CASE("enumeration caps are enforced") {
    REQUIRE_THROWS_AS(oracle::brute_splittance(Graph(21)), TooLarge);
    REQUIRE_THROWS_AS(oracle::brute_obstructions(Graph(41)), TooLarge);
    REQUIRE_THROWS_AS(oracle::brute_completion(Graph(25), 1), TooLarge);
    REQUIRE_THROWS_AS(oracle::brute_completion(Graph(5), 7), TooLarge);
}
