#ifndef EDGEBETTI_EXACT_LINALG_HPP
#define EDGEBETTI_EXACT_LINALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace edgebetti {

// Exact integer matrix, sparse triplet storage.  Boundary maps are built
// from +-1 triplets; elimination promotes to arbitrary precision as needed.
class IntegerMatrix {
public:
    struct Triplet {
        int row, col;
        long long value;
    };

    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    void add(int row, int col, long long value);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Triplet>& triplets() const { return entries_; }

    static IntegerMatrix from_dense(const std::vector<std::vector<long long>>& a);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Triplet> entries_;
};

struct SmithForm {
    int rank = 0;
    // d_1 | d_2 | ... | d_rank, each >= 1
    std::vector<mpz_class> invariant_factors;
};

// Diagonalization by unimodular row/column operations, least-absolute-value
// pivoting.  int64 fast path with checked overflow escape to GMP.
SmithForm smith_normal_form(const IntegerMatrix& m);

// Rank over F_p by Gaussian elimination on residues; p must be an odd or
// even prime below 2^31.
int rank_mod_p(const IntegerMatrix& m, long p);

// Rank over Q by fraction-free (Bareiss) elimination.
int rank_rational(const IntegerMatrix& m);

bool is_prime(long p);

// Sparse Schur-complement elimination of +-1 pivots.  Each eliminated pivot
// is a unimodular row/column pair, so for the returned remainder R:
//   rank_F(m) = pivots + rank_F(R) over every field F, and
//   SNF(m) = (1,...,1 [pivots times]) followed by SNF(R).
// Boundary matrices of simplicial complexes are all +-1, so this usually
// shrinks them to (near) nothing before any dense elimination runs.
struct UnitReduction {
    int pivots = 0;
    IntegerMatrix remainder;
};
UnitReduction eliminate_unit_pivots(const IntegerMatrix& m);

}  // namespace edgebetti

#endif
