#include "edgebetti/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <numeric>

namespace edgebetti {

namespace {

using Partition = std::vector<std::vector<int>>;

std::uint64_t cell_mask(const std::vector<int>& cell) {
    std::uint64_t m = 0;
    for (int v : cell) m |= std::uint64_t{1} << v;
    return m;
}

// Equitable refinement: split every cell by neighbor counts into every
// other cell until stable.  Key order ascending keeps it label-invariant.
void refine(const Graph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < p.size() && !changed; ++s) {
            std::uint64_t sm = cell_mask(p[s]);
            Partition np;
            np.reserve(p.size());
            for (auto& cell : p) {
                if (cell.size() == 1) {
                    np.push_back(cell);
                    continue;
                }
                std::array<std::vector<int>, 65> buckets;
                int maxk = 0;
                for (int v : cell) {
                    int k = std::popcount(g.adj[v] & sm);
                    buckets[k].push_back(v);
                    maxk = std::max(maxk, k);
                }
                int parts = 0;
                for (int k = 0; k <= maxk; ++k)
                    if (!buckets[k].empty()) {
                        np.push_back(std::move(buckets[k]));
                        ++parts;
                    }
                if (parts > 1) changed = true;
            }
            p = std::move(np);
        }
    }
}

bool is_discrete(const Partition& p) {
    for (auto& c : p)
        if (c.size() != 1) return false;
    return true;
}

CanonicalForm certificate(const Graph& g, const std::vector<int>& to_canon) {
    std::vector<int> inv(g.n);
    for (int v = 0; v < g.n; ++v) inv[to_canon[v]] = v;
    CanonicalForm f;
    f.bytes.push_back(static_cast<std::uint8_t>(g.n));
    int acc = 0, k = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(inv[row], inv[col]) ? 1 : 0);
            if (++k == 8) {
                f.bytes.push_back(static_cast<std::uint8_t>(acc));
                acc = 0;
                k = 0;
            }
        }
    if (k) f.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - k)));
    return f;
}

struct Searcher {
    const Graph& g;
    bool have_best = false;
    CanonicalForm best;
    std::vector<int> best_lab, best_inv;
    std::vector<std::vector<int>> gens;
    std::vector<int> prefix;

    explicit Searcher(const Graph& graph) : g(graph) {}

    bool is_automorphism(const std::vector<int>& perm) const {
        for (int v = 0; v < g.n; ++v) {
            std::uint64_t mapped = 0;
            for (std::uint64_t t = g.adj[v]; t; t &= t - 1)
                mapped |= std::uint64_t{1} << perm[std::countr_zero(t)];
            if (mapped != g.adj[perm[v]]) return false;
        }
        return true;
    }

    void leaf(const Partition& p) {
        std::vector<int> lab(g.n);
        for (std::size_t i = 0; i < p.size(); ++i) lab[p[i][0]] = static_cast<int>(i);
        CanonicalForm cert = certificate(g, lab);
        if (!have_best || cert < best) {
            have_best = true;
            best = std::move(cert);
            best_lab = lab;
            best_inv.assign(g.n, 0);
            for (int v = 0; v < g.n; ++v) best_inv[best_lab[v]] = v;
        } else if (cert == best) {
            std::vector<int> perm(g.n);
            bool ident = true;
            for (int v = 0; v < g.n; ++v) {
                perm[v] = best_inv[lab[v]];
                ident = ident && perm[v] == v;
            }
            if (!ident) {
                assert(is_automorphism(perm));
                gens.push_back(std::move(perm));
            }
        }
    }

    // Orbit representative of v under generators fixing `prefix` pointwise.
    int orbit_rep(int v) const {
        std::vector<int> uf(g.n);
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (auto& gen : gens) {
            bool fixes = true;
            for (int u : prefix)
                if (gen[u] != u) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < g.n; ++u) {
                int a = find(u), b = find(gen[u]);
                if (a != b) uf[std::max(a, b)] = std::min(a, b);
            }
        }
        return find(v);
    }

    void dfs(Partition p) {
        refine(g, p);
        if (is_discrete(p)) {
            leaf(p);
            return;
        }
        std::size_t target = 0;
        std::size_t best_size = ~std::size_t{0};
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i].size() > 1 && p[i].size() < best_size) {
                best_size = p[i].size();
                target = i;
            }
        std::vector<int> branched;
        for (int v : p[target]) {
            int rep = orbit_rep(v);
            if (std::find(branched.begin(), branched.end(), rep) != branched.end())
                continue;
            branched.push_back(rep);
            Partition child;
            child.reserve(p.size() + 1);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (i == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    for (int u : p[i])
                        if (u != v) rest.push_back(u);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(p[i]);
                }
            }
            prefix.push_back(v);
            dfs(std::move(child));
            prefix.pop_back();
        }
    }
};

}  // namespace

CanonicalLabeling canonicalize(const Graph& g) {
    if (g.n == 0) {
        CanonicalLabeling r;
        r.form.bytes = {0};
        return r;
    }
    // degree-partition seeding
    std::array<std::vector<int>, 65> by_deg;
    for (int v = 0; v < g.n; ++v) by_deg[g.degree(v)].push_back(v);
    Partition p;
    for (auto& cell : by_deg)
        if (!cell.empty()) p.push_back(cell);

    Searcher s(g);
    s.dfs(std::move(p));
    CanonicalLabeling r;
    r.form = std::move(s.best);
    r.to_canonical = std::move(s.best_lab);
    r.aut_generators = std::move(s.gens);
    return r;
}

CanonicalForm canonical_form(const Graph& g) { return canonicalize(g).form; }

std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (auto& gen : gens)
        for (int v = 0; v < n; ++v) {
            int a = find(v), b = find(gen[v]);
            if (a != b) uf[std::max(a, b)] = std::min(a, b);
        }
    std::vector<int> orb(n);
    for (int v = 0; v < n; ++v) orb[v] = find(v);
    return orb;
}

}  // namespace edgebetti
