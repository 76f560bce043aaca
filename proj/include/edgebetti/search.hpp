#ifndef EDGEBETTI_SEARCH_HPP
#define EDGEBETTI_SEARCH_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

// Minimal-counterexample filter.  A graph is kept only if no reduction rule
// applies: every vertex has degree in [2, n-5], the graph is connected, some
// vertex has degree > 2, and each vertex's non-neighbour set of size 4
// induces two disjoint edges while each of size 5 induces one of the six
// admissible 5-vertex graphs.
struct PruneVerdict {
    bool keep = true;
    std::vector<std::string> reasons;  // rule identifiers that fired
};

PruneVerdict prune(const Graph& g);

// The six admissible induced subgraphs on a 5-element non-neighbour set:
// P3+K2, P5, K3+K2, the triangle with a pendant 2-path, the bowtie, C5.
const std::vector<Graph>& admissible_s5_graphs();

// graph6 string of the canonically relabeled graph; equal strings iff
// isomorphic.
std::string canonical_graph6(const Graph& g);

struct ScanConfig {
    int jobs = 1;
    std::string checkpoint;     // JSONL journal path; empty disables
    // restrict the torsion search to homology degrees 1 <= j <= max(1, n-6),
    // the window where a minimal counterexample must carry torsion
    bool degree_window = true;
};

struct TorsionWitness {
    std::string g6;  // canonical form
    std::set<long> primes;
    std::vector<int> degrees;  // homology degrees carrying torsion
};

struct SearchReport {
    int n = 0;                 // largest vertex count processed
    long long enumerated = 0;  // graphs received from the source
    long long survivors = 0;   // graphs passing the filter
    std::vector<TorsionWitness> torsion_witnesses;  // sorted by g6
    double seconds = 0.0;
    std::string to_json() const;
};

// Run the filter-then-homology pipeline over a source of graphs.  The source
// is called once with a sink; isolated vertices are stripped on intake;
// results are cached per isomorphism class, journaled to the checkpoint file
// when configured, and reused on resume.  The report is deterministic for
// any worker count.
SearchReport scan(const std::function<void(const std::function<void(const Graph&)>&)>& source,
                  const ScanConfig& config = {});
SearchReport scan(const std::vector<Graph>& graphs, const ScanConfig& config = {});

// Exhaustively certify that no graph on n <= 10 vertices has
// characteristic-dependent Betti numbers: enumerate connected graphs with
// degrees in [2, n-5], scan, and demand zero witnesses.  Throws with the
// witness's graph6 string if one is found.
SearchReport verify_minimality(int n, const ScanConfig& config = {});

}  // namespace edgebetti

#endif
