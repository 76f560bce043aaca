#include "edgebetti/enumerate.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "edgebetti/canonical.hpp"

namespace edgebetti {

namespace {

// Orbit representatives (minimal element) of the action of Aut(parent) on
// neighborhood masks over the parent's vertex set.
std::vector<std::uint64_t> subset_orbit_reps(int k, const std::vector<std::vector<int>>& gens) {
    std::uint32_t count = std::uint32_t{1} << k;
    std::vector<std::uint32_t> uf(count);
    std::iota(uf.begin(), uf.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto& gen : gens) {
        for (std::uint32_t s = 0; s < count; ++s) {
            std::uint32_t img = 0;
            for (std::uint32_t t = s; t; t &= t - 1)
                img |= std::uint32_t{1} << gen[std::countr_zero(t)];
            std::uint32_t a = find(s), b = find(img);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::uint64_t> reps;
    for (std::uint32_t s = 0; s < count; ++s)
        if (find(s) == s) reps.push_back(s);
    return reps;
}

struct Generator {
    int n;
    EnumConstraints c;
    const std::function<void(const Graph&)>& emit;

    void finish(const Graph& g) {
        if (c.connected && !is_connected(g)) return;
        if (g.min_degree() < c.min_degree) return;
        emit(g);
    }

    void grow(const Graph& g, const CanonicalLabeling& lab) {
        if (g.n == n) {
            finish(g);
            return;
        }
        int k = g.n;
        for (std::uint64_t nb : subset_orbit_reps(k, lab.aut_generators)) {
            if (std::popcount(nb) > c.max_degree) continue;
            bool feasible = true;
            for (std::uint64_t t = nb; t; t &= t - 1)
                if (g.degree(std::countr_zero(t)) + 1 > c.max_degree) {
                    feasible = false;
                    break;
                }
            if (!feasible) continue;

            Graph child(k + 1);
            for (int v = 0; v < k; ++v) child.adj[v] = g.adj[v];
            child.adj[k] = nb;
            for (std::uint64_t t = nb; t; t &= t - 1)
                child.adj[std::countr_zero(t)] |= std::uint64_t{1} << k;

            CanonicalLabeling cl = canonicalize(child);
            // canonical deletable vertex: preimage of the last canonical slot
            int del = 0;
            for (int v = 0; v <= k; ++v)
                if (cl.to_canonical[v] == k) {
                    del = v;
                    break;
                }
            auto orb = vertex_orbits(k + 1, cl.aut_generators);
            if (orb[k] != orb[del]) continue;
            grow(child, cl);
        }
    }
};

}  // namespace

void enumerate_graphs(int n, const EnumConstraints& c,
                      const std::function<void(const Graph&)>& emit) {
    if (n < 1) return;
    Generator gen{n, c, emit};
    Graph k1(1);
    gen.grow(k1, canonicalize(k1));
}

long count_graphs(int n, const EnumConstraints& c) {
    long cnt = 0;
    enumerate_graphs(n, c, [&](const Graph&) { ++cnt; });
    return cnt;
}

}  // namespace edgebetti
