#ifndef EDGEBETTI_ENUMERATE_HPP
#define EDGEBETTI_ENUMERATE_HPP

#include <functional>
#include <limits>

#include "edgebetti/graph.hpp"

namespace edgebetti {

struct EnumConstraints {
    bool connected = false;
    int min_degree = 0;
    int max_degree = std::numeric_limits<int>::max();
};

// Isomorph-free exhaustive generation by canonical augmentation: one vertex
// is added at a time and a child survives iff its new vertex lies in the
// automorphism orbit of the canonical deletable vertex.  Exactly one
// representative per isomorphism class is emitted, in a fixed DFS order.
// The max-degree constraint prunes the generation tree; connectivity and
// min-degree are checked on the completed graphs.
void enumerate_graphs(int n, const EnumConstraints& c,
                      const std::function<void(const Graph&)>& emit);

long count_graphs(int n, const EnumConstraints& c);

}  // namespace edgebetti

#endif
