#ifndef EDGEBETTI_HOMOLOGY_HPP
#define EDGEBETTI_HOMOLOGY_HPP

#include <gmpxx.h>

#include <set>
#include <vector>

#include "edgebetti/complexes.hpp"
#include "edgebetti/exact_linalg.hpp"

namespace edgebetti {

// Coefficient field: characteristic 0 is the rationals, a prime p is F_p.
struct Field {
    long ch = 0;
};

// Reduced (augmented) chain complex over Z.  boundary[k] maps k-chains to
// (k-1)-chains for k = 0..dims; boundary[0] is the augmentation onto the
// empty face.  Faces of each dimension are indexed in sorted-bitmask order.
struct ChainComplexZ {
    int dims = -2;  // dimension of the complex; -2 for the void complex
    std::vector<IntegerMatrix> boundary;
};

struct HomologyGroup {
    int degree = 0;
    long long free_rank = 0;
    std::vector<mpz_class> torsion;  // invariant factors > 1
};

ChainComplexZ chain_complex(const SimplicialComplex& d);

// Groups for degrees -1..dim.  A single point has all groups zero; the
// complex {empty set} has H_{-1} = Z; the void complex has none at all.
std::vector<HomologyGroup> integral_reduced_homology(const SimplicialComplex& d);

// dims[j+1] = dim over the field of reduced homology in degree j, for
// j = -1..dim; computed from ranks only, independently of the integral path.
std::vector<long long> field_homology_dims(const SimplicialComplex& d, Field field);

// Primes dividing some invariant factor in some degree.
std::set<long> torsion_primes(const SimplicialComplex& d);

// Prime factors of n (n >= 1).
std::set<long> prime_divisors(const mpz_class& n);

}  // namespace edgebetti

#endif
