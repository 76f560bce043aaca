#ifndef EDGEBETTI_BETTI_HPP
#define EDGEBETTI_BETTI_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "edgebetti/complexes.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

// Graded Betti numbers beta_{i,d} of a Stanley-Reisner ring, keyed by
// (homological index i, internal degree d).
struct BettiDiagram {
    std::map<std::pair<int, int>, long long> entries;
    long field_ch = 0;
    int n_vars = 0;

    void add(int i, int d, long long c) {
        if (c != 0) entries[{i, d}] += c;
    }
    long long at(int i, int d) const {
        auto it = entries.find({i, d});
        return it == entries.end() ? 0 : it->second;
    }
    long long total(int i) const;
    int max_index() const;  // largest i with a nonzero entry
    std::vector<long long> totals() const;

    // Macaulay2-style text table: a "total:" line, then rows r = d - i.
    std::string to_m2() const;
    std::string to_json() const;

    bool operator==(const BettiDiagram&) const = default;
};

// Hochster's formula: beta_{i,d} = sum over d-subsets W of
// dim H_{d-i-1}(flag_complex(G[W])).  Subsets are cached by isomorphism
// class of the induced subgraph.  Guarded at n <= max_n.
BettiDiagram hochster_betti_graph(const Graph& g, Field field, int max_n = 20);

// Hochster's formula for an arbitrary complex via restrictions.
BettiDiagram stanley_reisner_betti(const SimplicialComplex& d, Field field, int max_n = 20);

// Eagon-Reiner: beta_{i,d} = sum over faces F of the Alexander dual with
// #(V-F) = d of dim H_{i-2}(link F).
BettiDiagram eagon_reiner_betti(const Graph& g, Field field);

struct CharDependenceReport {
    struct Witness {
        std::uint64_t w = 0;   // vertex subset with torsion
        int degree = 0;        // homology degree carrying the torsion
        std::vector<mpz_class> factors;
    };
    // per (i,d): integral free-rank contribution and torsion primes
    std::map<std::pair<int, int>, std::pair<long long, std::set<long>>> blocks;
    std::set<long> primes;  // empty iff Betti numbers are field-independent
    std::vector<Witness> witnesses;
    // homological indices i where beta_{i,d} depends on the characteristic
    std::set<int> dependent_indices() const;
};

// Integral homology over all induced-subgraph classes; exact detection of
// the characteristics where Betti numbers change.  Guarded at n <= max_n.
CharDependenceReport char_dependence(const Graph& g, int max_n = 16);

// beta_{i-1,i}: the linear strand, computed combinatorially from
// disconnected induced subgraphs of the complement.  Field-independent.
long long linear_strand_betti(const Graph& g, int i);

// max{#V(H) - 1 : H a disconnected induced subgraph of the complement}.
int linear_strand_length(const Graph& g);

// beta_{i,2i} = number of induced i-matchings; the top strand.
long long betti_top_strand(const Graph& g, int i);

// Alternating column sums of the diagram must match the K-polynomial
// (numerator of the Hilbert series) computed from the f-vector.
bool hilbert_consistency(const BettiDiagram& diagram, const SimplicialComplex& d);

// For deg(v) = n-1: beta_i(G) = beta'_i + beta'_{i-1} + C(n-1, i) for all
// i > 1, where beta' refers to G - v.
bool dominating_vertex_identity(const Graph& g, int v, Field field = {});

}  // namespace edgebetti

#endif
