#ifndef EDGEBETTI_TAYLOR_HPP
#define EDGEBETTI_TAYLOR_HPP

#include "edgebetti/betti.hpp"
#include "edgebetti/graph.hpp"
#include "edgebetti/homology.hpp"

namespace edgebetti {

// Betti numbers from the Taylor resolution of the edge ideal, tensored with
// the ground field: beta_{i,d} = dim H_i of the degree-d strand, where
// generators are edge subsets graded by the vertex count of their union.
// Oracle engine; guarded at #edges <= max_edges.
BettiDiagram taylor_betti(const Graph& g, Field field, int max_edges = 22);

// D such that beta_{i,d} = 0 for d > D: the largest vertex cover achieved
// by i edges.
int taylor_degree_bound(const Graph& g, int i);

}  // namespace edgebetti

#endif
