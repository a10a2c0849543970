#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "splitdyn/degree_ladder.hpp"
#include "splitdyn/oracle.hpp"

using namespace splitdyn;

namespace {

// Direct cost of the ladder's own partition: missing A-edges plus B-edges.
std::int64_t partition_cost(const DegreeLadder& lad) {
    const Graph& g = lad.graph();
    std::int64_t miss = 0, extra = 0;
    for (Vertex u = 1; u <= g.size(); ++u)
        for (Vertex v = u + 1; v <= g.size(); ++v) {
            bool both_a = lad.in_a(u) && lad.in_a(v);
            bool both_b = !lad.in_a(u) && !lad.in_a(v);
            if (both_a && !g.has_edge(u, v)) ++miss;
            if (both_b && g.has_edge(u, v)) ++extra;
        }
    return miss + extra;
}

} // namespace

TEST_CASE("ladder tracks exact splittance along random trajectories") {
    std::mt19937_64 rng(41);
    for (int n : {1, 2, 3, 5, 8, 12}) {
        DegreeLadder lad(n);
        REQUIRE(lad.splittance() == 0);
        REQUIRE(lad.threshold() == 0);
        std::uniform_int_distribution<int> pick(1, n);
        int steps = n < 4 ? 50 : 600;
        for (int t = 0; t < steps; ++t) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            lad.update(u, v);
            REQUIRE(lad.splittance() == oracle::brute_splittance(lad.graph()));
            REQUIRE(lad.splittance() == partition_cost(lad));
        }
    }
}

TEST_CASE("moved vertices are reported exactly") {
    std::mt19937_64 rng(42);
    int n = 10;
    DegreeLadder lad(n);
    std::vector<char> side(n + 1, 0);
    std::uniform_int_distribution<int> pick(1, n);
    for (int t = 0; t < 800; ++t) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        auto moved = lad.update(u, v);
        for (Vertex w = 1; w <= n; ++w) {
            bool flipped = std::find(moved.begin(), moved.end(), w) != moved.end();
            REQUIRE(flipped == (side[w] != (lad.in_a(w) ? 1 : 0)));
            side[w] = lad.in_a(w) ? 1 : 0;
        }
        REQUIRE(moved.size() <= 8);
    }
}

TEST_CASE("partition prefix matches threshold") {
    std::mt19937_64 rng(43);
    int n = 14;
    DegreeLadder lad(n);
    std::uniform_int_distribution<int> pick(1, n);
    for (int t = 0; t < 500; ++t) {
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        lad.update(u, v);
        auto [a, b] = lad.partition();
        REQUIRE(static_cast<int>(a.size()) == lad.threshold());
        REQUIRE(static_cast<int>(a.size() + b.size()) == n);
    }
}

TEST_CASE("edgeless graph puts everyone in B") {
    DegreeLadder lad(6);
    auto [a, b] = lad.partition();
    REQUIRE(a.empty());
    REQUIRE(b.size() == 6);
}
