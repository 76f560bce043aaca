#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

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

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Graph load_g6(const std::string& name) {
    std::istringstream in(slurp(std::string(EB_FIXTURES_DIR) + "/" + name));
    std::string line;
    in >> line;
    return parse_graph6(line);
}

}  // namespace

TEST_CASE("single edge resolves as a Koszul complex") {
    BettiDiagram d = hochster_betti_graph(Graph::from_edges(2, {{0, 1}}), Field{0});
    CHECK(d.entries == decltype(d.entries){{{0, 0}, 1}, {{1, 2}, 1}});
}

TEST_CASE("rp2 diagrams in both characteristics") {
    SimplicialComplex rp2 = parse_facets(slurp(std::string(EB_FIXTURES_DIR) + "/rp2_6.txt"));
    BettiDiagram c0 = stanley_reisner_betti(rp2, Field{0});
    CHECK(c0.totals() == std::vector<long long>{1, 10, 15, 6});
    CHECK(c0.at(1, 3) == 10);
    CHECK(c0.at(2, 4) == 15);
    CHECK(c0.at(3, 5) == 6);
    BettiDiagram c2 = stanley_reisner_betti(rp2, Field{2});
    CHECK(c2.totals() == std::vector<long long>{1, 10, 15, 7, 1});
    CHECK(c2.at(3, 5) == 6);
    CHECK(c2.at(3, 6) == 1);
    CHECK(c2.at(4, 6) == 1);
    CHECK(hilbert_consistency(c0, rp2));
    CHECK(hilbert_consistency(c2, rp2));

    // the zero ideal: full simplex
    SimplicialComplex full = flag_complex(Graph(5));
    BettiDiagram z = stanley_reisner_betti(full, Field{0});
    CHECK(z.entries == decltype(z.entries){{{0, 0}, 1}});
    CHECK(hilbert_consistency(z, full));
}

TEST_CASE("engine triple agreement on n <= 5") {
    for (int n = 1; n <= 5; ++n)
        enumerate_graphs(n, {}, [&](const Graph& g) {
            for (long ch : {0L, 2L, 3L}) {
                BettiDiagram h = hochster_betti_graph(g, Field{ch});
                BettiDiagram e = eagon_reiner_betti(g, Field{ch});
                BettiDiagram t = taylor_betti(g, Field{ch});
                CHECK(h.entries == e.entries);
                CHECK(h.entries == t.entries);
            }
        });
}

TEST_CASE("hochster equals stanley_reisner on the flag complex") {
    std::mt19937 rng(73);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(1 + int(rng() % 6), rng);
        for (long ch : {0L, 2L}) {
            CHECK(hochster_betti_graph(g, Field{ch}).entries ==
                  stanley_reisner_betti(flag_complex(g), Field{ch}).entries);
        }
    }
}

TEST_CASE("induced subgraph monotonicity") {
    std::mt19937 rng(79);
    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(2 + int(rng() % 6), rng);
        std::uint64_t w = rng() & g.full_mask();
        BettiDiagram big = hochster_betti_graph(g, Field{2});
        BettiDiagram sub = hochster_betti_graph(induced_subgraph(g, w), Field{2});
        for (auto& [key, c] : sub.entries) CHECK(c <= big.at(key.first, key.second));
    }
}

TEST_CASE("rational Betti numbers bound the modular ones") {
    std::mt19937 rng(83);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(1 + int(rng() % 7), rng);
        BettiDiagram q = hochster_betti_graph(g, Field{0});
        for (long p : {2L, 3L, 5L}) {
            BettiDiagram f = hochster_betti_graph(g, Field{p});
            for (auto& [key, c] : q.entries) CHECK(c <= f.at(key.first, key.second));
        }
    }
}

TEST_CASE("vanishing beyond the top strand and the induced matching count") {
    for (int n = 1; n <= 6; ++n)
        enumerate_graphs(n, {}, [&](const Graph& g) {
            BettiDiagram d = hochster_betti_graph(g, Field{2});
            for (auto& [key, c] : d.entries)
                if (c != 0) CHECK(key.second <= 2 * key.first);
            for (int i = 1; i <= n / 2 + 1; ++i)
                CHECK(d.at(i, 2 * i) == betti_top_strand(g, i));
        });
}

TEST_CASE("beta_{i,2i-1} does not depend on the field") {
    std::mt19937 rng(89);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(3 + int(rng() % 5), rng);
        BettiDiagram q = hochster_betti_graph(g, Field{0});
        BettiDiagram f2 = hochster_betti_graph(g, Field{2});
        BettiDiagram f3 = hochster_betti_graph(g, Field{3});
        for (int i = 1; i <= g.n; ++i) {
            CHECK(q.at(i, 2 * i - 1) == f2.at(i, 2 * i - 1));
            CHECK(q.at(i, 2 * i - 1) == f3.at(i, 2 * i - 1));
        }
    }
}

TEST_CASE("linear strand") {
    std::mt19937 rng(97);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(1 + int(rng() % 6), rng);
        CHECK(linear_strand_betti(g, 2) == g.edge_count());
        BettiDiagram f2 = hochster_betti_graph(g, Field{2});
        int largest = 0;
        for (int i = 1; i <= g.n; ++i) {
            CHECK(linear_strand_betti(g, i) == f2.at(i - 1, i));
            if (linear_strand_betti(g, i) > 0) largest = i - 1;
        }
        CHECK(linear_strand_length(g) == largest);
    }
    Graph k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
    CHECK(linear_strand_length(k4) == 3);
    CHECK(linear_strand_length(Graph::from_edges(2, {{0, 1}})) == 1);

    Graph h = load_g6("h11.g6");
    CHECK(linear_strand_betti(h, 2) == 23);
}

TEST_CASE("hilbert consistency on random graphs") {
    std::mt19937 rng(101);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(1 + int(rng() % 6), rng);
        SimplicialComplex d = flag_complex(g);
        for (long ch : {0L, 2L})
            CHECK(hilbert_consistency(hochster_betti_graph(g, Field{ch}), d));
    }
}

TEST_CASE("dominating vertex identity") {
    // star K_{1,3}
    Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(dominating_vertex_identity(star, 0));
    CHECK_THROWS(dominating_vertex_identity(star, 1));

    // cone over C4 (wheel) and cone over a single edge
    Graph wheel = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(dominating_vertex_identity(wheel, 0));
    Graph cone_edge = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(dominating_vertex_identity(cone_edge, 0));

    std::mt19937 rng(103);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + int(rng() % 6);
        Graph g = random_graph(n, rng);
        for (int v = 0; v < n; ++v)
            if (v != 0) g.add_edge(0, v);
        CHECK(dominating_vertex_identity(g, 0, Field{t % 2 ? 2 : 0}));
    }
}

TEST_CASE("star-shaped induced subgraphs force nonvanishing") {
    // if every edge of an induced H has an endpoint of degree one (in H),
    // then beta_{#E(H), #V(H)}(G) >= 1
    std::mt19937 rng(107);
    int tested = 0;
    while (tested < 200) {
        Graph g = random_graph(4 + int(rng() % 4), rng);
        BettiDiagram d = hochster_betti_graph(g, Field{2});
        for (std::uint64_t w = 1; w <= g.full_mask(); ++w) {
            Graph h = induced_subgraph(g, w);
            if (h.edge_count() == 0) continue;
            bool shape = true;
            for (auto [u, v] : h.edges())
                if (h.degree(u) != 1 && h.degree(v) != 1) shape = false;
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) == 0) shape = false;
            if (!shape) continue;
            ++tested;
            CHECK(d.at(h.edge_count(), h.n) >= 1);
        }
    }
}

TEST_CASE("characteristic dependence") {
    std::mt19937 rng(109);
    for (int t = 0; t < 15; ++t) {
        auto rep = char_dependence(random_graph(1 + int(rng() % 6), rng));
        CHECK(rep.primes.empty());
        CHECK(rep.witnesses.empty());
    }

    Graph h = load_g6("h11.g6");
    auto rep = char_dependence(h);
    CHECK(rep.primes == std::set<long>{2});
    CHECK(rep.dependent_indices() == std::set<int>{8, 9});
    REQUIRE(rep.witnesses.size() == 1);
    CHECK(rep.witnesses[0].w == h.full_mask());
    CHECK(rep.witnesses[0].factors == std::vector<mpz_class>{2});

    // disjoint-union: primes are the union of the parts' primes
    Graph hk2(13);
    for (auto [u, v] : h.edges()) hk2.add_edge(u, v);
    hk2.add_edge(11, 12);
    auto rep2 = char_dependence(hk2);
    CHECK(rep2.primes == std::set<long>{2});
}

TEST_CASE("diagram formatting") {
    BettiDiagram d;
    d.n_vars = 3;
    d.add(0, 0, 1);
    d.add(1, 2, 2);
    d.add(2, 3, 1);
    CHECK(d.to_m2() ==
          "total: 1 2 1\n"
          "    0: 1 . .\n"
          "    1: . 2 1\n");
    auto j = nlohmann::json::parse(d.to_json());
    CHECK(j["field"] == "0");
    CHECK(j["totals"] == nlohmann::json({1, 2, 1}));
    CHECK(j["entries"].size() == 3);
}

TEST_CASE("guards") {
    CHECK_THROWS(hochster_betti_graph(Graph(21), Field{0}));
    CHECK_THROWS(hochster_betti_graph(Graph(3), Field{4}));
    CHECK_THROWS(char_dependence(Graph(17)));
    CHECK_THROWS(linear_strand_betti(Graph(3), 0));
    BettiDiagram empty_ideal = eagon_reiner_betti(Graph(4), Field{0});
    CHECK(empty_ideal.entries == decltype(empty_ideal.entries){{{0, 0}, 1}});
}
