#include "edgebetti/graph.hpp"

#include <algorithm>
#include <bit>

namespace edgebetti {

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = 64;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

long Graph::edge_count() const {
    long e = 0;
    for (int v = 0; v < n; ++v) e += degree(v);
    return e / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u) {
        std::uint64_t m = adj[u] >> (u + 1) << (u + 1);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    static constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) pos = header.size();
    // Strip one trailing newline.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (pos >= text.size()) throw Graph6ParseError("empty graph6 record", pos);

    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw Graph6ParseError("truncated graph6 record", i);
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw Graph6ParseError("byte outside [63, 126]", i);
        return c - 63;
    };

    long n;
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = byte_at(pos);
        pos += 1;
    } else {
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
            n = 0;
            for (int k = 0; k < 6; ++k) n = (n << 6) | byte_at(pos + 2 + k);
            pos += 8;
        } else {
            n = 0;
            for (int k = 0; k < 3; ++k) n = (n << 6) | byte_at(pos + 1 + k);
            pos += 4;
        }
    }
    if (n > 64) throw Graph6ParseError("vertex count exceeds 64", pos);

    Graph g(static_cast<int>(n));
    long bits = n * (n - 1) / 2;
    long nbytes = (bits + 5) / 6;
    long bit = 0;
    for (long i = 0; i < nbytes; ++i) {
        int b = byte_at(pos + i);
        for (int k = 5; k >= 0 && bit < bits; --k, ++bit) {
            if ((b >> k) & 1) {
                // column-major upper triangle: bit index -> (row, col)
                long t = bit;
                int col = 1;
                while (t >= col) t -= col, ++col;
                g.add_edge(static_cast<int>(t), col);
            }
        }
        // padding bits must be zero
        if (bit >= bits) {
            int pad = static_cast<int>(6 * (i + 1) - bits);
            if (pad > 0 && (b & ((1 << pad) - 1)) != 0)
                throw Graph6ParseError("nonzero padding bits", pos + i);
        }
    }
    pos += nbytes;
    if (pos != text.size()) throw Graph6ParseError("trailing garbage", pos);
    return g;
}

std::string emit_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(63 + g.n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((g.n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((g.n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (g.n & 63)));
    }
    long bits = static_cast<long>(g.n) * (g.n - 1) / 2;
    int acc = 0, k = 0;
    for (int col = 1; col < g.n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++k == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                k = 0;
            }
        }
    if (bits % 6 != 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits % 6))));
    return out;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    std::uint64_t full = g.full_mask();
    for (int v = 0; v < g.n; ++v)
        c.adj[v] = full & ~g.adj[v] & ~(std::uint64_t{1} << v);
    return c;
}

Graph induced_subgraph(const Graph& g, std::uint64_t w) {
    w &= g.full_mask();
    int m = std::popcount(w);
    std::vector<int> keep;
    keep.reserve(m);
    for (std::uint64_t t = w; t; t &= t - 1) keep.push_back(std::countr_zero(t));
    Graph h(m);
    for (int i = 0; i < m; ++i) {
        std::uint64_t row = g.adj[keep[i]] & w;
        // compact row bits to new labels
        std::uint64_t nr = 0;
        for (int j = 0; j < m; ++j)
            if ((row >> keep[j]) & 1) nr |= std::uint64_t{1} << j;
        h.adj[i] = nr;
    }
    return h;
}

std::vector<std::uint64_t> connected_components(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.n; ++v) {
        std::uint64_t bv = std::uint64_t{1} << v;
        if (seen & bv) continue;
        std::uint64_t comp = bv, frontier = bv;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t t = frontier; t; t &= t - 1)
                next |= g.adj[std::countr_zero(t)];
            frontier = next & ~comp;
            comp |= frontier;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.n <= 1 || connected_components(g).size() == 1;
}

namespace {
long count_matchings(const Graph& g, const std::vector<std::pair<int, int>>& es,
                     std::size_t from, std::uint64_t used, int left) {
    if (left == 0) {
        // induced check: no edge of g inside `used` other than the chosen ones
        // is enforced incrementally below, so reaching here means success.
        return 1;
    }
    long total = 0;
    for (std::size_t k = from; k < es.size(); ++k) {
        auto [u, v] = es[k];
        std::uint64_t ev = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if (used & ev) continue;
        // disjoint and no edge between {u,v} and previously used vertices
        if ((g.adj[u] & used) || (g.adj[v] & used)) continue;
        total += count_matchings(g, es, k + 1, used | ev, left - 1);
    }
    return total;
}
}  // namespace

long induced_matching_count(const Graph& g, int i) {
    if (i < 1) throw std::invalid_argument("induced_matching_count: i must be >= 1");
    auto es = g.edges();
    return count_matchings(g, es, 0, 0, i);
}

}  // namespace edgebetti
