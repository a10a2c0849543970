#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "splitdyn/neighbor_sampler.hpp"

using namespace splitdyn;

namespace {

// One A-clique plus a hub a* = 1 adjacent to the first `span` B-vertices.
struct Planted {
    int n, a_size, span;
    NeighborSampler ns;

    Planted(int n, int a_size, int span, int ell, int d, std::uint64_t seed)
        : n(n), a_size(a_size), span(span), ns(n, ell, d, seed) {
        std::vector<Vertex> moved;
        EdgeList mods;
        for (Vertex v = 1; v <= a_size; ++v) {
            moved.push_back(v);
            for (Vertex u = v + 1; u <= a_size; ++u) mods.push_back({v, u});
        }
        for (Vertex b = a_size + 1; b <= a_size + span; ++b) mods.push_back({1, b});
        ns.batch_update(moved, mods, {}, {});
    }
};

} // namespace

TEST_CASE("small neighborhoods are returned exactly") {
    Planted pl(80, 4, 5, 10, 2, 31);
    auto got = pl.ns.sample_edges(1);
    std::vector<Vertex> want;
    for (Vertex b = 5; b <= 9; ++b) want.push_back(b);
    REQUIRE(got == want);
    REQUIRE(pl.ns.sample_edges(2).empty());
}

TEST_CASE("oversized neighborhoods yield exactly ell verified vertices") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        Planted pl(600, 4, 400, 4, 2, seed);
        auto got = pl.ns.sample_edges(1);
        REQUIRE(got.size() == 4);
        std::set<Vertex> dedup(got.begin(), got.end());
        REQUIRE(dedup.size() == 4);
        for (Vertex b : got) {
            REQUIRE(b > 4);
            REQUIRE(b <= 404);
            REQUIRE(pl.ns.partitioned().g.has_edge(1, b));
        }
    }
}

TEST_CASE("non-edge sampling mirrors edge sampling") {
    // b* adjacent to nothing: its A-non-neighborhood is all of A
    Planted pl(200, 30, 0, 6, 2, 77);
    Vertex b = 100;
    auto got = pl.ns.sample_non_edges(b);
    REQUIRE(got.size() == 6);
    for (Vertex a : got) {
        REQUIRE(a <= 30);
        REQUIRE_FALSE(pl.ns.partitioned().g.has_edge(b, a));
    }
    REQUIRE_THROWS_AS(pl.ns.sample_non_edges(1), WrongSide);
    REQUIRE_THROWS_AS(pl.ns.sample_edges(b), WrongSide);
}

TEST_CASE("sampling is deterministic under a fixed seed") {
    Planted p1(400, 3, 250, 5, 2, 99);
    Planted p2(400, 3, 250, 5, 2, 99);
    REQUIRE(p1.ns.sample_edges(1) == p2.ns.sample_edges(1));
    REQUIRE(p1.ns.sample_non_edges(300) == p2.ns.sample_non_edges(300));
}

TEST_CASE("batch followed by its inverse restores answers") {
    Planted pl(200, 3, 120, 5, 2, 55);
    auto before = pl.ns.sample_edges(1);
    EdgeList batch = {{1, 150}, {1, 151}, {2, 160}};
    pl.ns.batch_update({}, batch, {}, {});
    pl.ns.batch_update({}, batch, {}, {});
    REQUIRE(pl.ns.sample_edges(1) == before);
}

TEST_CASE("layer structure matches the declared shape") {
    NeighborSampler ns(16, 2, 1, 5);
    REQUIRE(ns.levels() == 4);
    REQUIRE(ns.per_level() == 4);
    // expected |V_{1,j}| is n/2; all layers fixed at init
    int total = 0;
    for (int j = 0; j < ns.per_level(); ++j)
        for (Vertex v = 1; v <= 16; ++v) total += ns.layer_core(1, j).in_s(v) ? 1 : 0;
    REQUIRE(total > 8);
    REQUIRE(total < 56);
}
