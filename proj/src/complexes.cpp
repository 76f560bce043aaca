#include "edgebetti/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace edgebetti {

namespace {

// drop duplicates and faces dominated by a larger face
std::vector<std::uint64_t> facet_antichain(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    std::vector<std::uint64_t> keep;
    for (std::uint64_t s : sets) {
        bool dominated = false;
        for (std::uint64_t k : keep)
            if ((s & k) == s) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x with most neighbours in p
    int pivot = -1, best = -1;
    for (std::uint64_t m = p | x; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int cnt = std::popcount(p & g.adj[v]);
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    for (std::uint64_t cand = p & ~g.adj[pivot]; cand;) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(g, r | bit, p & g.adj[v], x & g.adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

void emit_subsets(const std::vector<int>& bits, int pick, std::size_t from, std::uint64_t acc,
                  std::set<std::uint64_t>& out) {
    if (pick == 0) {
        out.insert(acc);
        return;
    }
    for (std::size_t i = from; i + pick <= bits.size(); ++i)
        emit_subsets(bits, pick - 1, i + 1, acc | (std::uint64_t{1} << bits[i]), out);
}

}  // namespace

SimplicialComplex::SimplicialComplex(int universe, std::vector<std::uint64_t> facets)
    : universe_(universe), facets_(facet_antichain(std::move(facets))) {}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (std::uint64_t f : facets_) d = std::max(d, std::popcount(f) - 1);
    return d;
}

const std::vector<std::uint64_t>& SimplicialComplex::faces(int k) const {
    static const std::vector<std::uint64_t> none;
    if (is_void() || k < -1 || k > dim()) return none;
    std::size_t slot = static_cast<std::size_t>(k + 1);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (face_cache_.size() <= slot) face_cache_.resize(slot + 1);
    if (face_cache_[slot].empty() && !(k == -1)) {
        std::set<std::uint64_t> found;
        for (std::uint64_t f : facets_) {
            if (std::popcount(f) < k + 1) continue;
            std::vector<int> bits;
            for (std::uint64_t m = f; m;) {
                bits.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            emit_subsets(bits, k + 1, 0, 0, found);
        }
        face_cache_[slot].assign(found.begin(), found.end());
    } else if (k == -1 && face_cache_[slot].empty()) {
        face_cache_[slot] = {0};
    }
    return face_cache_[slot];
}

bool SimplicialComplex::contains(std::uint64_t face) const {
    for (std::uint64_t f : facets_)
        if ((face & f) == face) return true;
    return false;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    if (is_void()) return f;
    for (int k = -1; k <= dim(); ++k) f.push_back(static_cast<long long>(faces(k).size()));
    return f;
}

SimplicialComplex flag_complex(const Graph& g) {
    Graph c = complement(g);
    std::vector<std::uint64_t> maximal;
    bron_kerbosch(c, 0, c.full_mask(), 0, maximal);
    if (maximal.empty()) maximal.push_back(0);
    return SimplicialComplex(g.n, std::move(maximal));
}

SimplicialComplex restriction(const SimplicialComplex& d, std::uint64_t w) {
    std::vector<int> pos(64, -1);
    int m = 0;
    for (int v = 0; v < d.universe(); ++v)
        if (w & (std::uint64_t{1} << v)) pos[v] = m++;
    std::vector<std::uint64_t> cut;
    for (std::uint64_t f : d.facets()) {
        std::uint64_t g = 0;
        for (std::uint64_t rest = f & w; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            g |= std::uint64_t{1} << pos[v];
        }
        cut.push_back(g);
    }
    return SimplicialComplex(m, std::move(cut));
}

SimplicialComplex alexander_dual_of_graph(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("alexander_dual_of_graph: dual is the void complex");
    std::vector<std::uint64_t> facets;
    std::uint64_t full = g.full_mask();
    for (auto [u, v] : g.edges())
        facets.push_back(full & ~(std::uint64_t{1} << u) & ~(std::uint64_t{1} << v));
    return SimplicialComplex(g.n, std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& d, std::uint64_t f) {
    if (!d.contains(f)) throw std::invalid_argument("link: not a face of the complex");
    std::vector<std::uint64_t> facets;
    for (std::uint64_t g : d.facets())
        if ((f & g) == f) facets.push_back(g & ~f);
    return SimplicialComplex(d.universe(), std::move(facets));
}

std::optional<int> is_cone(const SimplicialComplex& d) {
    if (d.is_void()) return std::nullopt;
    std::uint64_t common = d.facets().front();
    for (std::uint64_t f : d.facets()) common &= f;
    if (common == 0) return std::nullopt;
    return std::countr_zero(common);
}

SimplicialComplex parse_facets(const std::string& text) {
    std::vector<std::vector<long>> raw;
    std::set<long> labels;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long> facet;
        long v;
        while (ls >> v) facet.push_back(v);
        if (!ls.eof()) throw std::invalid_argument("parse_facets: non-numeric token in: " + line);
        if (facet.empty()) continue;
        for (long x : facet) labels.insert(x);
        raw.push_back(std::move(facet));
    }
    std::map<long, int> index;
    for (long x : labels) index.emplace(x, static_cast<int>(index.size()));
    if (index.size() > 64) throw std::invalid_argument("parse_facets: more than 64 vertices");
    std::vector<std::uint64_t> facets;
    for (auto& f : raw) {
        std::uint64_t mask = 0;
        for (long x : f) mask |= std::uint64_t{1} << index.at(x);
        facets.push_back(mask);
    }
    return SimplicialComplex(static_cast<int>(index.size()), std::move(facets));
}

}  // namespace edgebetti
