#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "splitdyn/dynamic_split.hpp"
#include "splitdyn/oracle.hpp"

using namespace splitdyn;

namespace {

void scan(const DynamicSplitGraph& w, EdgeList& nea, EdgeList& eb) {
    const Graph& g = w.graph();
    for (Vertex u = 1; u <= w.size(); ++u)
        for (Vertex v = u + 1; v <= w.size(); ++v) {
            if (w.in_a(u) && w.in_a(v) && !g.has_edge(u, v)) nea.push_back({u, v});
            if (!w.in_a(u) && !w.in_a(v) && g.has_edge(u, v)) eb.push_back({u, v});
        }
}

} // namespace

TEST_CASE("lists match direct scans at every compliant step") {
    for (auto [n, k, steps] : {std::tuple{12, 2, 1500}, {30, 3, 2500}, {60, 4, 2500}}) {
        std::mt19937_64 rng(1000 + n);
        DynamicSplitGraph w(n, k, 2, 500 + n);
        std::uniform_int_distribution<int> pick(1, n);
        std::vector<std::pair<Vertex, Vertex>> present;
        int compliant = 0, crossings = 0;
        bool was_over = false;
        for (int t = 0; t < steps; ++t) {
            Vertex u, v;
            // deletion-biased walk: keeps the graph sparse so splittance
            // oscillates around the budget instead of running away
            if (!present.empty() && rng() % 10 < 6) {
                auto& e = present[rng() % present.size()];
                u = e.first;
                v = e.second;
            } else {
                u = pick(rng);
                v = pick(rng);
            }
            if (u == v) continue;
            auto ce = canonical_edge(u, v);
            auto it = std::find(present.begin(), present.end(), ce);
            if (it != present.end())
                present.erase(it);
            else
                present.push_back(ce);
            w.update(u, v);
            bool over = w.splittance() > k;
            if (over != was_over) ++crossings;
            was_over = over;
            if (over) continue;
            ++compliant;
            EdgeList nea, eb;
            scan(w, nea, eb);
            REQUIRE(w.list_non_edges_a() == nea);
            REQUIRE(w.list_edges_b() == eb);
        }
        // the trace must actually exercise both the queue and flush paths
        REQUIRE(compliant > 20);
        REQUIRE(crossings > 10);
    }
}

TEST_CASE("splittance stays exact even over budget") {
    int n = 13, k = 1;
    std::mt19937_64 rng(77);
    DynamicSplitGraph w(n, k, 2, 9);
    std::uniform_int_distribution<int> pick(1, n);
    for (int t = 0; t < 800; ++t) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        w.update(u, v);
        REQUIRE(w.splittance() == oracle::brute_splittance(w.graph()));
    }
}

TEST_CASE("toggle twice while over budget is a no-op after flush") {
    int n = 10, k = 1;
    DynamicSplitGraph w(n, k, 2, 3);
    // build 3K2: splittance 2 > k
    w.update(1, 2);
    w.update(3, 4);
    w.update(5, 6);
    REQUIRE(w.splittance() > k);
    w.update(7, 8);
    w.update(7, 8);
    // tear one edge down to get compliant again
    w.update(5, 6);
    REQUIRE(w.splittance() <= k);
    EdgeList nea, eb;
    scan(w, nea, eb);
    REQUIRE(w.list_non_edges_a() == nea);
    REQUIRE(w.list_edges_b() == eb);
    REQUIRE_FALSE(w.graph().has_edge(7, 8));
}

TEST_CASE("samples are sound and sized at compliant steps") {
    int n = 40, k = 3;
    std::mt19937_64 rng(123);
    DynamicSplitGraph w(n, k, 2, 21);
    std::uniform_int_distribution<int> pick(1, n);
    int checked = 0;
    for (int t = 0; t < 1500 && checked < 120; ++t) {
        Vertex u = pick(rng), v = pick(rng);
        if (u == v) continue;
        w.update(u, v);
        if (w.splittance() > k) continue;
        for (Vertex x = 1; x <= n; ++x) {
            std::vector<Vertex> got;
            std::vector<Vertex> truth;
            if (w.in_a(x)) {
                got = w.sample_edges(x);
                for (Vertex y = 1; y <= n; ++y)
                    if (!w.in_a(y) && w.graph().has_edge(x, y)) truth.push_back(y);
            } else {
                got = w.sample_non_edges(x);
                for (Vertex y = 1; y <= n; ++y)
                    if (y != x && w.in_a(y) && !w.graph().has_edge(x, y))
                        truth.push_back(y);
            }
            REQUIRE(static_cast<int>(got.size()) ==
                    std::min<int>(10 * k, static_cast<int>(truth.size())));
            for (Vertex y : got)
                REQUIRE(std::find(truth.begin(), truth.end(), y) != truth.end());
            ++checked;
        }
    }
    REQUIRE(checked >= 120);
}

TEST_CASE("fresh wrapper state") {
    DynamicSplitGraph w(8, 2, 2, 1);
    REQUIRE(w.splittance() == 0);
    REQUIRE(w.list_edges_b().empty());
    REQUIRE(w.list_non_edges_a().empty());
    REQUIRE_THROWS_AS(w.sample_edges(1), WrongSide);
    REQUIRE(w.sample_non_edges(1).empty());
}
