#include "edgebetti/betti.hpp"

#include <bit>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "edgebetti/canonical.hpp"

namespace edgebetti {

namespace {

// next subset of the same popcount (Gosper); masks enumerated ascending
std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v, r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// process-wide cache: reduced homology dims of flag complexes per
// isomorphism class and field
std::vector<long long> flag_homology_dims_cached(const Graph& g, Field field) {
    static std::mutex mtx;
    static std::map<std::pair<CanonicalForm, long>, std::vector<long long>> cache;
    CanonicalForm form = canonical_form(g);
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({form, field.ch});
        if (it != cache.end()) return it->second;
    }
    std::vector<long long> dims = field_homology_dims(flag_complex(g), field);
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(std::move(form), field.ch), dims);
    return dims;
}

void check_field(Field field) {
    if (field.ch != 0 && !is_prime(field.ch))
        throw std::invalid_argument("field characteristic must be 0 or a prime");
}

}  // namespace

long long BettiDiagram::total(int i) const {
    long long t = 0;
    for (auto& [key, c] : entries)
        if (key.first == i) t += c;
    return t;
}

int BettiDiagram::max_index() const {
    int m = 0;
    for (auto& [key, c] : entries)
        if (c != 0) m = std::max(m, key.first);
    return m;
}

std::vector<long long> BettiDiagram::totals() const {
    std::vector<long long> t(max_index() + 1, 0);
    for (auto& [key, c] : entries) t[key.first] += c;
    return t;
}

std::string BettiDiagram::to_m2() const {
    int cols = max_index();
    int rows = 0;
    for (auto& [key, c] : entries)
        if (c != 0) rows = std::max(rows, key.second - key.first);
    std::vector<long long> tot = totals();
    auto digits = [](long long v) { return static_cast<int>(std::to_string(v).size()); };
    std::vector<int> width(cols + 1, 1);
    for (int i = 0; i <= cols; ++i) {
        width[i] = std::max(width[i], digits(tot[i]));
        for (int r = 0; r <= rows; ++r)
            if (long long v = at(i, i + r)) width[i] = std::max(width[i], digits(v));
    }
    std::ostringstream out;
    auto cell = [&](int i, long long v) {
        std::string s = v ? std::to_string(v) : ".";
        out << ' ' << std::string(width[i] - s.size(), ' ') << s;
    };
    out << "total:";
    for (int i = 0; i <= cols; ++i) cell(i, tot[i]);
    out << '\n';
    for (int r = 0; r <= rows; ++r) {
        std::string label = std::to_string(r);
        out << std::string(5 - label.size(), ' ') << label << ':';
        for (int i = 0; i <= cols; ++i) cell(i, at(i, i + r));
        out << '\n';
    }
    return out.str();
}

std::string BettiDiagram::to_json() const {
    nlohmann::json j;
    j["field"] = std::to_string(field_ch);
    j["entries"] = nlohmann::json::array();
    for (auto& [key, c] : entries)
        if (c != 0) j["entries"].push_back({key.first, key.second, c});
    j["totals"] = totals();
    return j.dump();
}

BettiDiagram hochster_betti_graph(const Graph& g, Field field, int max_n) {
    check_field(field);
    if (g.n > max_n)
        throw std::invalid_argument(
            "hochster_betti_graph: vertex count exceeds the 2^n subset guard; "
            "use eagon_reiner_betti or raise the guard");
    BettiDiagram out;
    out.field_ch = field.ch;
    out.n_vars = g.n;
    for (std::uint64_t w = 0;; ++w) {
        int d = std::popcount(w);
        auto dims = flag_homology_dims_cached(induced_subgraph(g, w), field);
        for (std::size_t jj = 0; jj < dims.size(); ++jj) {
            int j = static_cast<int>(jj) - 1;
            int i = d - j - 1;
            if (i >= 0) out.add(i, d, dims[jj]);
        }
        if (w == g.full_mask()) break;
    }
    return out;
}

BettiDiagram stanley_reisner_betti(const SimplicialComplex& dd, Field field, int max_n) {
    check_field(field);
    if (dd.universe() > max_n)
        throw std::invalid_argument("stanley_reisner_betti: universe exceeds the subset guard");
    BettiDiagram out;
    out.field_ch = field.ch;
    out.n_vars = dd.universe();
    std::uint64_t full =
        dd.universe() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dd.universe()) - 1;
    for (std::uint64_t w = 0;; ++w) {
        int d = std::popcount(w);
        auto dims = field_homology_dims(restriction(dd, w), field);
        for (std::size_t jj = 0; jj < dims.size(); ++jj) {
            int j = static_cast<int>(jj) - 1;
            int i = d - j - 1;
            if (i >= 0) out.add(i, d, dims[jj]);
        }
        if (w == full) break;
    }
    return out;
}

BettiDiagram eagon_reiner_betti(const Graph& g, Field field) {
    check_field(field);
    BettiDiagram out;
    out.field_ch = field.ch;
    out.n_vars = g.n;
    out.add(0, 0, 1);
    if (g.edge_count() == 0) return out;
    SimplicialComplex dual = alexander_dual_of_graph(g);
    std::map<std::vector<std::uint64_t>, std::vector<long long>> link_cache;
    for (int k = -1; k <= dual.dim(); ++k)
        for (std::uint64_t f : dual.faces(k)) {
            SimplicialComplex l = link(dual, f);
            auto it = link_cache.find(l.facets());
            if (it == link_cache.end())
                it = link_cache.emplace(l.facets(), field_homology_dims(l, field)).first;
            const auto& dims = it->second;
            int d = g.n - std::popcount(f);
            for (std::size_t jj = 0; jj < dims.size(); ++jj) {
                int i = static_cast<int>(jj) - 1 + 2;
                if (i >= 1) out.add(i, d, dims[jj]);
            }
        }
    return out;
}

std::set<int> CharDependenceReport::dependent_indices() const {
    std::set<int> out;
    for (auto& w : witnesses) {
        int d = std::popcount(w.w);
        for (int i : {d - w.degree - 1, d - w.degree - 2})
            if (i >= 0) out.insert(i);
    }
    return out;
}

CharDependenceReport char_dependence(const Graph& g, int max_n) {
    if (g.n > max_n)
        throw std::invalid_argument("char_dependence: vertex count exceeds the subset guard");
    CharDependenceReport report;
    struct ClassData {
        std::vector<HomologyGroup> homology;
        bool torsion_free_shortcut = false;
    };
    std::map<CanonicalForm, ClassData> classes;
    for (std::uint64_t w = 0;; ++w) {
        Graph h = induced_subgraph(g, w);
        auto [it, fresh] = classes.try_emplace(canonical_form(h));
        if (fresh) {
            if (h.max_degree() <= 2) {
                // cycles and paths have torsion-free flag homology; still
                // need the free ranks, but field char 0 dims equal them
                it->second.torsion_free_shortcut = true;
                auto dims = field_homology_dims(flag_complex(h), Field{0});
                for (std::size_t jj = 0; jj < dims.size(); ++jj)
                    it->second.homology.push_back(
                        {static_cast<int>(jj) - 1, dims[jj], {}});
            } else {
                it->second.homology = integral_reduced_homology(flag_complex(h));
            }
        }
        int d = std::popcount(w);
        for (auto& grp : it->second.homology) {
            int i = d - grp.degree - 1;
            if (i < 0) continue;
            auto& blk = report.blocks[{i, d}];
            blk.first += grp.free_rank;
            if (!grp.torsion.empty()) {
                CharDependenceReport::Witness wit;
                wit.w = w;
                wit.degree = grp.degree;
                wit.factors = grp.torsion;
                for (auto& f : grp.torsion)
                    for (long p : prime_divisors(f)) {
                        blk.second.insert(p);
                        report.primes.insert(p);
                    }
                report.witnesses.push_back(std::move(wit));
            }
        }
        if (w == g.full_mask()) break;
    }
    return report;
}

long long linear_strand_betti(const Graph& g, int i) {
    if (i < 1) throw std::invalid_argument("linear_strand_betti: index must be >= 1");
    if (i > g.n) return 0;
    Graph gc = complement(g);
    long long sum = 0;
    std::uint64_t w = (std::uint64_t{1} << i) - 1;
    for (; w <= g.full_mask(); w = next_same_popcount(w)) {
        sum += static_cast<long long>(connected_components(induced_subgraph(gc, w)).size()) - 1;
        if (w == 0) break;  // i == 0 guard (unreachable)
    }
    return sum;
}

int linear_strand_length(const Graph& g) {
    Graph gc = complement(g);
    int best = 0;
    for (std::uint64_t w = 3; w <= g.full_mask(); ++w) {
        int k = std::popcount(w);
        if (k < 2 || k - 1 <= best) continue;
        if (connected_components(induced_subgraph(gc, w)).size() > 1) best = k - 1;
    }
    return best;
}

long long betti_top_strand(const Graph& g, int i) {
    if (i < 1) throw std::invalid_argument("betti_top_strand: index must be >= 1");
    return induced_matching_count(g, i);
}

bool hilbert_consistency(const BettiDiagram& diagram, const SimplicialComplex& d) {
    int n = diagram.n_vars;
    // alternating column sums of the diagram
    std::vector<long long> lhs(n + 1, 0);
    for (auto& [key, c] : diagram.entries) {
        if (key.second > n) return false;
        lhs[key.second] += (key.first % 2 ? -c : c);
    }
    // K-polynomial from the f-vector: sum_k f_{k-1} t^k (1-t)^{n-k}
    std::vector<long long> rhs(n + 1, 0);
    auto fv = d.f_vector();
    for (std::size_t k = 0; k < fv.size(); ++k)
        for (int m = 0; m + static_cast<int>(k) <= n; ++m)
            rhs[k + m] += fv[k] * binomial(n - static_cast<int>(k), m) * (m % 2 ? -1 : 1);
    return lhs == rhs;
}

bool dominating_vertex_identity(const Graph& g, int v, Field field) {
    if (v < 0 || v >= g.n || g.degree(v) != g.n - 1)
        throw std::invalid_argument("dominating_vertex_identity: vertex degree must be n-1");
    BettiDiagram big = hochster_betti_graph(g, field);
    Graph rest = induced_subgraph(g, g.full_mask() & ~(std::uint64_t{1} << v));
    BettiDiagram small = hochster_betti_graph(rest, field);
    int hi = std::max({big.max_index(), small.max_index() + 1, g.n - 1});
    for (int i = 2; i <= hi; ++i)
        if (big.total(i) != small.total(i) + small.total(i - 1) + binomial(g.n - 1, i))
            return false;
    return true;
}

}  // namespace edgebetti
