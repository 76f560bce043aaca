#ifndef EDGEBETTI_CANONICAL_HPP
#define EDGEBETTI_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

// Label-invariant certificate: n followed by the upper-triangle bit string
// of the canonically relabeled adjacency matrix, packed MSB-first.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const {
        std::size_t h = 1469598103934665603ull;
        for (auto b : f.bytes) h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

struct CanonicalLabeling {
    CanonicalForm form;
    // to_canonical[v] = position of v in the canonical order
    std::vector<int> to_canonical;
    // generators of (a subgroup generating) Aut(g), as vertex permutations
    std::vector<std::vector<int>> aut_generators;
};

// Individualization-refinement with degree-partition seeding and
// automorphism orbit pruning.  Intended regime: n <= 16.
CanonicalLabeling canonicalize(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

// Orbit id (least member) per vertex under the given generators.
std::vector<int> vertex_orbits(int n, const std::vector<std::vector<int>>& gens);

}  // namespace edgebetti

#endif
