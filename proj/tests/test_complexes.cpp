#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "edgebetti/complexes.hpp"
#include "edgebetti/graph.hpp"

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

bool independent(const Graph& g, std::uint64_t w) {
    for (std::uint64_t m = w; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (g.adj[v] & w) return false;
    }
    return true;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("flag complex basics") {
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    SimplicialComplex d = flag_complex(two_k2);
    // independent pairs form a 4-cycle boundary: a 1-sphere with 4 edges
    CHECK(d.dim() == 1);
    CHECK(d.faces(1).size() == 4);
    CHECK(d.faces(0).size() == 4);

    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    SimplicialComplex dc5 = flag_complex(c5);
    CHECK(dc5.dim() == 1);
    CHECK(dc5.faces(1).size() == 5);

    // edgeless graph: full simplex
    SimplicialComplex full = flag_complex(Graph(4));
    CHECK(full.facets().size() == 1);
    CHECK(full.facets()[0] == 0xF);

    // 0-vertex graph: the complex {empty set}
    SimplicialComplex empty = flag_complex(Graph(0));
    CHECK_FALSE(empty.is_void());
    CHECK(empty.dim() == -1);
}

TEST_CASE("flag complex faces are exactly the independent sets") {
    std::mt19937 rng(41);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + int(rng() % 7);
        Graph g = random_graph(n, rng);
        SimplicialComplex d = flag_complex(g);
        std::vector<long long> by_size(n + 1, 0);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
            bool ind = independent(g, w);
            CHECK(d.contains(w) == ind);
            if (ind) ++by_size[std::popcount(w)];
        }
        auto f = d.f_vector();
        for (int k = -1; k <= d.dim(); ++k) CHECK(f[k + 1] == by_size[k + 1]);
        long long total = 0;
        for (auto c : f) total += c;
        long long expect = 0;
        for (auto c : by_size) expect += c;
        CHECK(total == expect);
    }
}

TEST_CASE("facets form an antichain") {
    std::mt19937 rng(43);
    for (int t = 0; t < 50; ++t) {
        SimplicialComplex d = flag_complex(random_graph(1 + int(rng() % 8), rng));
        for (auto a : d.facets())
            for (auto b : d.facets())
                if (a != b) CHECK((a & b) != a);
    }
}

TEST_CASE("restriction") {
    std::mt19937 rng(47);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + int(rng() % 8);
        Graph g = random_graph(n, rng);
        std::uint64_t w = rng() & g.full_mask();
        SimplicialComplex a = restriction(flag_complex(g), w);
        SimplicialComplex b = flag_complex(induced_subgraph(g, w));
        CHECK(a == b);
    }
    SimplicialComplex d = flag_complex(random_graph(6, rng));
    CHECK(restriction(d, d.facets().back() | (d.facets().front())) ==
          restriction(d, d.facets().back() | d.facets().front()));
    CHECK(restriction(d, (std::uint64_t{1} << 6) - 1) == d);
    SimplicialComplex only_empty = restriction(d, 0);
    CHECK(only_empty.dim() == -1);
    CHECK(only_empty.facets() == std::vector<std::uint64_t>{0});
}

TEST_CASE("alexander dual") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    SimplicialComplex dk2 = alexander_dual_of_graph(k2);
    CHECK(dk2.facets() == std::vector<std::uint64_t>{0});

    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    SimplicialComplex dp3 = alexander_dual_of_graph(p3);
    CHECK(dp3.facets() == std::vector<std::uint64_t>{0b001, 0b100});

    CHECK_THROWS(alexander_dual_of_graph(Graph(3)));

    // F in dual  <=>  V-F is not a face of the flag complex
    std::mt19937 rng(53);
    int done = 0;
    while (done < 100) {
        int n = 2 + int(rng() % 6);
        Graph g = random_graph(n, rng);
        if (g.edge_count() == 0) continue;
        ++done;
        SimplicialComplex dual = alexander_dual_of_graph(g);
        SimplicialComplex flag = flag_complex(g);
        for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
            CHECK(dual.contains(f) == !flag.contains(g.full_mask() & ~f));
    }
}

TEST_CASE("link") {
    std::mt19937 rng(59);
    Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    SimplicialComplex dual = alexander_dual_of_graph(c5);

    CHECK(link(dual, 0) == dual);
    for (auto f : dual.facets()) {
        SimplicialComplex l = link(dual, f);
        CHECK(l.facets() == std::vector<std::uint64_t>{0});
    }
    CHECK_THROWS(link(dual, dual.facets()[0] | (1u << std::countr_zero(~dual.facets()[0]))));

    // brute-force definition check on a vertex link
    for (int v = 0; v < 5; ++v) {
        std::uint64_t vb = std::uint64_t{1} << v;
        if (!dual.contains(vb)) continue;
        SimplicialComplex l = link(dual, vb);
        for (std::uint64_t s = 0; s < 32; ++s)
            CHECK(l.contains(s) == ((s & vb) == 0 && dual.contains(s | vb)));
    }

    // for a graph dual, link facets are V - (F u {u,v}) over edges missing F
    for (int t = 0; t < 50; ++t) {
        int n = 3 + int(rng() % 5);
        Graph g = random_graph(n, rng);
        if (g.edge_count() == 0) continue;
        SimplicialComplex d = alexander_dual_of_graph(g);
        for (std::uint64_t f : d.faces(0)) {
            std::set<std::uint64_t> expect;
            for (auto [u, v] : g.edges()) {
                std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
                if (uv & f) continue;
                expect.insert(g.full_mask() & ~(f | uv));
            }
            // maximal members of expect
            std::set<std::uint64_t> maximal;
            for (auto a : expect) {
                bool dom = false;
                for (auto b : expect)
                    if (a != b && (a & b) == a) dom = true;
                if (!dom) maximal.insert(a);
            }
            auto lf = link(d, f).facets();
            CHECK(std::set<std::uint64_t>(lf.begin(), lf.end()) == maximal);
        }
    }
}

TEST_CASE("is_cone") {
    CHECK(is_cone(flag_complex(Graph(4))) == 0);
    Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!is_cone(flag_complex(two_k2)));
    Graph with_isolated = Graph::from_edges(4, {{1, 2}, {2, 3}});
    CHECK(is_cone(flag_complex(with_isolated)) == 0);
}

TEST_CASE("facet file parsing") {
    SimplicialComplex d = parse_facets("# comment\n1 2 3\n2 3 4  # trailing\n\n4 1\n");
    CHECK(d.universe() == 4);
    CHECK(d.dim() == 2);
    CHECK(d.faces(2).size() == 2);
    CHECK(d.contains(0b1001));  // labels 1 and 4 -> vertices 0 and 3
    CHECK_THROWS(parse_facets("1 x 3\n"));

    SimplicialComplex rp2 = parse_facets(slurp(std::string(EB_FIXTURES_DIR) + "/rp2_6.txt"));
    CHECK(rp2.universe() == 6);
    CHECK(rp2.dim() == 2);
    CHECK(rp2.faces(2).size() == 10);
    CHECK(rp2.faces(1).size() == 15);
    CHECK(rp2.faces(0).size() == 6);
}
