#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <map>
#include <random>
#include <vector>

#include "edgebetti/betti.hpp"
#include "edgebetti/enumerate.hpp"
#include "edgebetti/taylor.hpp"

using namespace edgebetti;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

using Dense = std::vector<std::vector<long long>>;

// independent re-derivation of the Taylor differential for cross-checking:
// one dense matrix per (i,d) block, built directly from the definition
std::map<std::pair<int, int>, Dense> taylor_matrices(const Graph& g) {
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    std::vector<std::uint64_t> vmask(ne);
    for (int e = 0; e < ne; ++e)
        vmask[e] = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
    auto cover_of = [&](std::uint64_t m) {
        std::uint64_t c = 0;
        while (m) {
            c |= vmask[std::countr_zero(m)];
            m &= m - 1;
        }
        return c;
    };
    std::map<std::pair<int, int>, std::vector<std::uint64_t>> blocks;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ne); ++m)
        blocks[{std::popcount(m), std::popcount(cover_of(m))}].push_back(m);
    std::map<std::pair<int, int>, Dense> out;
    for (auto& [key, gens] : blocks) {
        auto [i, d] = key;
        if (i == 0) continue;
        std::vector<std::uint64_t> target;
        if (auto it = blocks.find({i - 1, d}); it != blocks.end()) target = it->second;
        // a zero row stands in for an empty target so the column count (the
        // generator count of the block) survives
        Dense m(std::max<std::size_t>(target.size(), 1),
                std::vector<long long>(gens.size(), 0));
        for (std::size_t col = 0; col < gens.size(); ++col) {
            int k = 0;
            for (std::uint64_t rest = gens[col]; rest; rest &= rest - 1, ++k) {
                std::uint64_t rem = gens[col] & ~(rest & -rest);
                if (cover_of(rem) != cover_of(gens[col])) continue;
                for (std::size_t r = 0; r < target.size(); ++r)
                    if (target[r] == rem) m[r][col] += k % 2 ? -1 : 1;
            }
        }
        out.emplace(key, std::move(m));
    }
    return out;
}

}  // namespace

TEST_CASE("examples") {
    BettiDiagram edge = taylor_betti(Graph::from_edges(2, {{0, 1}}), Field{0});
    CHECK(edge.entries == decltype(edge.entries){{{0, 0}, 1}, {{1, 2}, 1}});

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    BettiDiagram d = taylor_betti(c5, Field{0});
    CHECK(d.totals() == std::vector<long long>{1, 5, 5, 1});
    CHECK(d.at(1, 2) == 5);
    CHECK(d.at(2, 3) == 5);
    CHECK(d.at(3, 5) == 1);

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    BettiDiagram p = taylor_betti(p3, Field{3});
    CHECK(p.entries == decltype(p.entries){{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
}

TEST_CASE("the differential squares to zero blockwise") {
    std::mt19937 rng(113);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(2 + int(rng() % 4), rng, 0.6);
        auto mats = taylor_matrices(g);
        for (auto& [key, up] : mats) {
            auto down = mats.find({key.first - 1, key.second});
            if (down == mats.end() || down->second.empty() || up.empty()) continue;
            REQUIRE(down->second[0].size() == up.size());
            for (std::size_t r = 0; r < down->second.size(); ++r)
                for (std::size_t c = 0; c < up[0].size(); ++c) {
                    long long s = 0;
                    for (std::size_t k = 0; k < up.size(); ++k)
                        s += down->second[r][k] * up[k][c];
                    CHECK(s == 0);
                }
        }
    }
}

TEST_CASE("block homology from the re-derived matrices matches taylor_betti") {
    std::mt19937 rng(127);
    for (int t = 0; t < 20; ++t) {
        Graph g = random_graph(2 + int(rng() % 3), rng, 0.7);
        auto mats = taylor_matrices(g);
        BettiDiagram d = taylor_betti(g, Field{0});
        auto rank = [](const Dense& m) {
            return m.empty() ? 0 : rank_rational(IntegerMatrix::from_dense(m));
        };
        for (auto& [key, c] : d.entries) {
            long long dim = 0;
            if (key == std::pair<int, int>{0, 0}) {
                dim = 1;
            } else if (auto it = mats.find(key); it != mats.end()) {
                // generator count of the block = column count of its outgoing
                // differential; blocks with an empty target keep their columns
                dim = static_cast<long long>(it->second.empty() ? 0 : it->second[0].size()) -
                      rank(it->second);
            }
            if (auto it = mats.find({key.first + 1, key.second}); it != mats.end())
                dim -= rank(it->second);
            CHECK(dim == c);
        }
    }
}

TEST_CASE("degree bound") {
    // i disjoint edges cover 2i vertices
    Graph m3 = Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}});
    for (int i = 0; i <= 3; ++i) CHECK(taylor_degree_bound(m3, i) == 2 * i);

    // the three edges of a triangle cover only 3 vertices
    Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(taylor_degree_bound(tri, 3) == 3);

    // any three star edges cover 4 vertices
    Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(taylor_degree_bound(star, 3) == 4);

    // Betti numbers vanish beyond the bound
    std::mt19937 rng(131);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(2 + int(rng() % 5), rng);
        BettiDiagram d = hochster_betti_graph(g, Field{2});
        for (auto& [key, c] : d.entries)
            if (c != 0 && key.first <= g.edge_count())
                CHECK(key.second <= taylor_degree_bound(g, key.first));
    }

    CHECK_THROWS(taylor_degree_bound(m3, 4));
    CHECK_THROWS(taylor_degree_bound(m3, -1));
}

TEST_CASE("top-degree generators are the induced matchings") {
    std::mt19937 rng(137);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(2 + int(rng() % 5), rng);
        if (g.edge_count() > 12) continue;
        BettiDiagram d = taylor_betti(g, Field{0});
        for (int i = 1; i <= g.edge_count(); ++i)
            CHECK(d.at(i, 2 * i) == induced_matching_count(g, i));
    }
}

TEST_CASE("agreement with hochster over several fields") {
    std::mt19937 rng(139);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(3 + int(rng() % 3), rng);
        if (g.edge_count() > 11) continue;
        for (long ch : {0L, 2L, 5L})
            CHECK(taylor_betti(g, Field{ch}).entries ==
                  hochster_betti_graph(g, Field{ch}).entries);
    }
}

TEST_CASE("guards") {
    Graph k8(8);
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) k8.add_edge(u, v);
    CHECK_THROWS(taylor_betti(k8, Field{0}));  // 28 edges > 22
    CHECK_THROWS(taylor_betti(Graph(3), Field{6}));
    BettiDiagram empty = taylor_betti(Graph(4), Field{0});
    CHECK(empty.entries == decltype(empty.entries){{{0, 0}, 1}});
}
