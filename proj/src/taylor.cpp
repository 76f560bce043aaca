#include "edgebetti/taylor.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace edgebetti {

namespace {

std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v, r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

BettiDiagram taylor_betti(const Graph& g, Field field, int max_edges) {
    if (field.ch != 0 && !is_prime(field.ch))
        throw std::invalid_argument("taylor_betti: field characteristic must be 0 or a prime");
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    if (ne > max_edges)
        throw std::invalid_argument(
            "taylor_betti: edge count exceeds the 2^E generator guard; "
            "use hochster_betti_graph");
    std::vector<std::uint64_t> vmask(ne);
    for (int e = 0; e < ne; ++e)
        vmask[e] = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);

    // generator = edge subset; its degree is the size of the covered vertex set
    std::uint64_t count = std::uint64_t{1} << ne;
    std::vector<std::uint64_t> cover(count, 0);
    std::map<std::pair<int, int>, std::vector<std::uint64_t>> blocks;
    for (std::uint64_t m = 1; m < count; ++m)
        cover[m] = cover[m & (m - 1)] | vmask[std::countr_zero(m)];
    for (std::uint64_t m = 0; m < count; ++m)
        blocks[{std::popcount(m), std::popcount(cover[m])}].push_back(m);

    // rank of the differential from block (i,d) to block (i-1,d); the
    // tensored differential keeps a term only when dropping the edge leaves
    // the covered set unchanged, with sign (-1)^k over sorted positions
    std::map<std::pair<int, int>, int> rank_in;  // keyed by source block
    for (auto& [key, gens] : blocks) {
        auto [i, d] = key;
        if (i == 0) continue;
        auto target = blocks.find({i - 1, d});
        if (target == blocks.end()) continue;
        std::unordered_map<std::uint64_t, int> row;
        row.reserve(target->second.size());
        for (std::size_t r = 0; r < target->second.size(); ++r)
            row.emplace(target->second[r], static_cast<int>(r));
        IntegerMatrix m(static_cast<int>(target->second.size()), static_cast<int>(gens.size()));
        for (std::size_t col = 0; col < gens.size(); ++col) {
            int k = 0;
            for (std::uint64_t rest = gens[col]; rest; ++k) {
                int e = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t rem = gens[col] & ~(std::uint64_t{1} << e);
                if (cover[rem] == cover[gens[col]])
                    m.add(row.at(rem), static_cast<int>(col), k % 2 ? -1 : 1);
            }
        }
        rank_in[key] = field.ch == 0 ? rank_rational(m) : rank_mod_p(m, field.ch);
    }

    BettiDiagram out;
    out.field_ch = field.ch;
    out.n_vars = g.n;
    for (auto& [key, gens] : blocks) {
        auto [i, d] = key;
        long long dim = static_cast<long long>(gens.size());
        auto down = rank_in.find(key);
        if (down != rank_in.end()) dim -= down->second;
        auto up = rank_in.find({i + 1, d});
        if (up != rank_in.end()) dim -= up->second;
        out.add(i, d, dim);
    }
    return out;
}

int taylor_degree_bound(const Graph& g, int i) {
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    if (i < 0 || i > ne)
        throw std::invalid_argument("taylor_degree_bound: index exceeds the edge count");
    if (i == 0) return 0;
    std::vector<std::uint64_t> vmask(ne);
    for (int e = 0; e < ne; ++e)
        vmask[e] = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
    int best = 0;
    std::uint64_t full = (std::uint64_t{1} << ne) - 1;
    for (std::uint64_t w = (std::uint64_t{1} << i) - 1; w <= full; w = next_same_popcount(w)) {
        std::uint64_t cov = 0;
        for (std::uint64_t m = w; m;) {
            cov |= vmask[std::countr_zero(m)];
            m &= m - 1;
        }
        best = std::max(best, std::popcount(cov));
    }
    return best;
}

}  // namespace edgebetti
