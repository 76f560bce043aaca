#ifndef EDGEBETTI_COMPLEXES_HPP
#define EDGEBETTI_COMPLEXES_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edgebetti/graph.hpp"

namespace edgebetti {

// Simplicial complex on vertices 0..universe-1, stored by its maximal faces.
// The void complex (no faces at all) has an empty facet list; the complex
// whose only face is the empty set has the single facet 0.  Faces of each
// dimension are materialized lazily and cached.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    // Facets are deduplicated and dominated sets removed.
    SimplicialComplex(int universe, std::vector<std::uint64_t> facets);

    SimplicialComplex(const SimplicialComplex& o) : universe_(o.universe_), facets_(o.facets_) {}
    SimplicialComplex& operator=(const SimplicialComplex& o) {
        universe_ = o.universe_;
        facets_ = o.facets_;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        face_cache_.clear();
        return *this;
    }

    int universe() const { return universe_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    // -2 for the void complex, -1 for {empty set}
    int dim() const;

    // Faces of dimension k (sets of k+1 vertices), sorted by bit pattern.
    // k = -1 yields {0} (the empty face) for any nonvoid complex.
    const std::vector<std::uint64_t>& faces(int k) const;
    bool contains(std::uint64_t face) const;
    // f_vector()[k+1] = number of k-faces, starting at f_{-1} = 1.
    std::vector<long long> f_vector() const;

    bool operator==(const SimplicialComplex& o) const {
        return universe_ == o.universe_ && facets_ == o.facets_;
    }

private:
    int universe_ = 0;
    std::vector<std::uint64_t> facets_;
    mutable std::mutex cache_mutex_;
    mutable std::vector<std::vector<std::uint64_t>> face_cache_;  // index k+1
};

// Independence complex of g: faces are the independent vertex sets.
SimplicialComplex flag_complex(const Graph& g);

// Faces of d contained in w, with vertices compacted to 0..popcount(w)-1.
SimplicialComplex restriction(const SimplicialComplex& d, std::uint64_t w);

// Facets V - {u,v} over the edges (u,v) of g.  Throws on an edgeless graph.
SimplicialComplex alexander_dual_of_graph(const Graph& g);

// Faces G with G disjoint from f and G union f a face.  Vertex labels are
// preserved (no compaction).  Throws if f is not a face.
SimplicialComplex link(const SimplicialComplex& d, std::uint64_t f);

// A vertex contained in every facet, if any (least index).
std::optional<int> is_cone(const SimplicialComplex& d);

// Facet-list text format: one facet per line as space-separated vertex
// labels; '#' starts a comment.  Distinct labels are mapped onto 0..m-1 in
// ascending order, so 1-indexed input files work unchanged.
SimplicialComplex parse_facets(const std::string& text);

}  // namespace edgebetti

#endif
