#include "edgebetti/exact_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace edgebetti {

void IntegerMatrix::add(int row, int col, long long value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
        throw std::out_of_range("IntegerMatrix::add: index out of range");
    if (value != 0) entries_.push_back({row, col, value});
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<long long>>& a) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.add(i, j, a[i][j]);
    return m;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

struct Overflow {};

// Scalar concept shared by the int64 fast path and the GMP path.
struct I64 {
    long long v = 0;
    I64() = default;
    I64(long long x) : v(x) {}
    static void check(__int128 x) {
        if (x > (__int128{1} << 62) || x < -(__int128{1} << 62)) throw Overflow{};
    }
    I64 operator*(const I64& o) const {
        __int128 p = static_cast<__int128>(v) * o.v;
        check(p);
        return I64{static_cast<long long>(p)};
    }
    I64 operator-(const I64& o) const {
        __int128 d = static_cast<__int128>(v) - o.v;
        check(d);
        return I64{static_cast<long long>(d)};
    }
    I64 operator+(const I64& o) const {
        __int128 s = static_cast<__int128>(v) + o.v;
        check(s);
        return I64{static_cast<long long>(s)};
    }
    I64 operator/(const I64& o) const { return I64{v / o.v}; }
    I64 operator%(const I64& o) const { return I64{v % o.v}; }
    I64 operator-() const { return I64{-v}; }
    bool operator==(const I64&) const = default;
    auto operator<=>(const I64&) const = default;
    bool is_zero() const { return v == 0; }
    I64 abs() const { return I64{std::llabs(v)}; }
};

struct MPZ {
    mpz_class v;
    MPZ() = default;
    MPZ(long long x) : v(static_cast<long>(x)) {}
    MPZ(mpz_class x) : v(std::move(x)) {}
    MPZ operator*(const MPZ& o) const { return MPZ{mpz_class(v * o.v)}; }
    MPZ operator-(const MPZ& o) const { return MPZ{mpz_class(v - o.v)}; }
    MPZ operator+(const MPZ& o) const { return MPZ{mpz_class(v + o.v)}; }
    MPZ operator/(const MPZ& o) const {
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), v.get_mpz_t(), o.v.get_mpz_t());
        return MPZ{q};
    }
    MPZ operator%(const MPZ& o) const {
        mpz_class r;
        mpz_tdiv_r(r.get_mpz_t(), v.get_mpz_t(), o.v.get_mpz_t());
        return MPZ{r};
    }
    MPZ operator-() const { return MPZ{mpz_class(-v)}; }
    bool operator==(const MPZ&) const = default;
    bool operator<(const MPZ& o) const { return v < o.v; }
    bool is_zero() const { return v == 0; }
    MPZ abs() const { return MPZ{mpz_class(::abs(v))}; }
};

template <class T>
std::vector<std::vector<T>> densify(const IntegerMatrix& m) {
    std::vector<std::vector<T>> a(m.rows(), std::vector<T>(m.cols(), T{0}));
    for (auto& t : m.triplets()) a[t.row][t.col] = a[t.row][t.col] + T{t.value};
    return a;
}

// Quotient rounded to the nearest integer; keeps |a - q*b| <= |b|/2, which
// bounds coefficient growth during elimination far better than truncation.
template <class T>
T div_nearest(const T& a, const T& b) {
    T q = a / b;
    T r = a - q * b;
    if (b.abs() < r.abs() + r.abs()) {
        bool same_sign = (r < T{0}) == (b < T{0});
        q = same_sign ? q + T{1} : q - T{1};
    }
    return q;
}

// Smith normal form of a dense matrix; returns (rank, diagonal).
template <class T>
SmithForm snf_dense(std::vector<std::vector<T>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int t = 0;
    std::vector<T> diag;
    while (t < rows && t < cols) {
        bool exhausted = false;
        for (;;) {
            // re-select the least-absolute-value pivot over the whole
            // submatrix each pass; together with nearest-integer quotients
            // this avoids the coefficient explosion of fixed-pivot Euclid
            int pr = -1, pc = -1;
            T best{0};
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (!a[i][j].is_zero()) {
                        T m = a[i][j].abs();
                        if (pr < 0 || m < best) {
                            best = m;
                            pr = i;
                            pc = j;
                        }
                    }
            if (pr < 0) {
                exhausted = true;
                break;
            }
            std::swap(a[t], a[pr]);
            if (pc != t)
                for (int i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

            bool clean = true;
            // clear column t; a nonzero remainder means the pivot was not a
            // divisor, so re-select (the remainder is the new minimum)
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t].is_zero()) continue;
                T q = div_nearest(a[i][t], a[t][t]);
                if (!q.is_zero())
                    for (int j = t; j < cols; ++j) a[i][j] = a[i][j] - q * a[t][j];
                if (!a[i][t].is_zero()) clean = false;
            }
            // clear row t
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j].is_zero()) continue;
                T q = div_nearest(a[t][j], a[t][t]);
                if (!q.is_zero())
                    for (int i = t; i < rows; ++i) a[i][j] = a[i][j] - q * a[i][t];
                if (!a[t][j].is_zero()) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the submatrix; if not, pull the
            // offending row into row t and restart with a smaller pivot
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (!(a[i][j] % a[t][t]).is_zero()) {
                        for (int jj = t; jj < cols; ++jj) a[t][jj] = a[t][jj] + a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (exhausted) break;
        diag.push_back(a[t][t].abs());
        ++t;
    }
    SmithForm f;
    f.rank = static_cast<int>(diag.size());
    for (auto& d : diag) {
        if constexpr (std::is_same_v<T, I64>)
            f.invariant_factors.emplace_back(static_cast<long>(d.v));
        else
            f.invariant_factors.push_back(d.v);
    }
    return f;
}

template <class T>
int bareiss_rank(std::vector<std::vector<T>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    T prev{1};
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        // smallest-magnitude pivot in column region keeps entries small
        int pr = -1, pc = -1;
        T best{0};
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j)
                if (!a[i][j].is_zero()) {
                    T m = a[i][j].abs();
                    if (pr < 0 || m < best) {
                        best = m;
                        pr = i;
                        pc = j;
                    }
                }
        if (pr < 0) break;
        std::swap(a[r], a[pr]);
        if (pc != c)
            for (int i = 0; i < rows; ++i) std::swap(a[i][c], a[i][pc]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = T{0};
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

}  // namespace

UnitReduction eliminate_unit_pivots(const IntegerMatrix& m) {
    int nrows = m.rows(), ncols = m.cols();
    std::vector<std::map<int, long long>> row(nrows);
    for (auto& t : m.triplets()) {
        long long& cell = row[t.row][t.col];
        cell += t.value;
        if (cell == 0) row[t.row].erase(t.col);
    }
    std::vector<std::set<int>> colrows(ncols);
    for (int r = 0; r < nrows; ++r)
        for (auto& [c, v] : row[r]) colrows[c].insert(r);

    std::vector<char> row_dead(nrows, 0), col_dead(ncols, 0);
    int pivots = 0;
    for (;;) {
        // unit entry with least Markowitz fill estimate
        int pr = -1, pc = -1;
        long long best = -1;
        for (int r = 0; r < nrows && best != 0; ++r) {
            if (row_dead[r]) continue;
            for (auto& [c, v] : row[r]) {
                if (v != 1 && v != -1) continue;
                long long score = static_cast<long long>(row[r].size() - 1) *
                                  static_cast<long long>(colrows[c].size() - 1);
                if (best < 0 || score < best) {
                    best = score;
                    pr = r;
                    pc = c;
                    if (best == 0) break;
                }
            }
        }
        if (pr < 0) break;

        long long piv = row[pr].at(pc);
        std::vector<int> touched(colrows[pc].begin(), colrows[pc].end());
        // dry-run overflow check so an abort leaves the matrix intact
        bool safe = true;
        for (int i : touched) {
            if (i == pr) continue;
            __int128 f = static_cast<__int128>(row[i].at(pc)) * piv;
            for (auto& [c2, v2] : row[pr]) {
                if (c2 == pc) continue;
                auto it = row[i].find(c2);
                __int128 nv = (it == row[i].end() ? 0 : it->second) - f * v2;
                if (nv > (__int128{1} << 62) || nv < -(__int128{1} << 62)) safe = false;
            }
            if (!safe) break;
        }
        if (!safe) break;  // leave the rest to the big-integer dense path

        for (int i : touched) {
            if (i == pr) continue;
            long long f = row[i].at(pc) * piv;
            for (auto& [c2, v2] : row[pr]) {
                if (c2 == pc) continue;
                long long& cell = row[i][c2];
                bool was_zero = (cell == 0);
                cell -= f * v2;
                if (cell == 0) {
                    row[i].erase(c2);
                    colrows[c2].erase(i);
                } else if (was_zero) {
                    colrows[c2].insert(i);
                }
            }
            row[i].erase(pc);
        }
        for (auto& [c2, v2] : row[pr]) colrows[c2].erase(pr);
        row[pr].clear();
        row_dead[pr] = 1;
        col_dead[pc] = 1;
        ++pivots;
    }

    std::vector<int> rmap(nrows, -1), cmap(ncols, -1);
    int rr = 0, cc = 0;
    for (int r = 0; r < nrows; ++r)
        if (!row_dead[r]) rmap[r] = rr++;
    for (int c = 0; c < ncols; ++c)
        if (!col_dead[c]) cmap[c] = cc++;
    IntegerMatrix rem(rr, cc);
    for (int r = 0; r < nrows; ++r)
        if (!row_dead[r])
            for (auto& [c, v] : row[r]) rem.add(rmap[r], cmap[c], v);
    return {pivots, std::move(rem)};
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.triplets().empty()) return {};
    UnitReduction u = eliminate_unit_pivots(m);
    SmithForm f;
    if (!u.remainder.triplets().empty()) {
        try {
            f = snf_dense<I64>(densify<I64>(u.remainder));
        } catch (const Overflow&) {
            f = snf_dense<MPZ>(densify<MPZ>(u.remainder));
        }
    }
    f.rank += u.pivots;
    f.invariant_factors.insert(f.invariant_factors.begin(), u.pivots, mpz_class(1));
    return f;
}

int rank_rational(const IntegerMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0 || m.triplets().empty()) return 0;
    UnitReduction u = eliminate_unit_pivots(m);
    if (u.remainder.triplets().empty()) return u.pivots;
    try {
        return u.pivots + bareiss_rank<I64>(densify<I64>(u.remainder));
    } catch (const Overflow&) {
        return u.pivots + bareiss_rank<MPZ>(densify<MPZ>(u.remainder));
    }
}

int rank_mod_p(const IntegerMatrix& m, long p) {
    if (p < 2 || p >= (1L << 31) || !is_prime(p))
        throw std::invalid_argument("rank_mod_p: p must be a prime below 2^31");
    if (m.rows() == 0 || m.cols() == 0 || m.triplets().empty()) return 0;
    UnitReduction u = eliminate_unit_pivots(m);
    if (u.remainder.triplets().empty()) return u.pivots;
    const IntegerMatrix& mr = u.remainder;
    int rows = mr.rows(), cols = mr.cols();

    if (p == 2) {
        int words = (cols + 63) / 64;
        std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * words, 0);
        for (auto& t : mr.triplets())
            if (t.value & 1)
                a[static_cast<std::size_t>(t.row) * words + t.col / 64] ^=
                    std::uint64_t{1} << (t.col % 64);
        int r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int w = c / 64;
            std::uint64_t bit = std::uint64_t{1} << (c % 64);
            int pivot = -1;
            for (int i = r; i < rows; ++i)
                if (a[static_cast<std::size_t>(i) * words + w] & bit) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            for (int k = 0; k < words; ++k)
                std::swap(a[static_cast<std::size_t>(r) * words + k],
                          a[static_cast<std::size_t>(pivot) * words + k]);
            for (int i = r + 1; i < rows; ++i)
                if (a[static_cast<std::size_t>(i) * words + w] & bit)
                    for (int k = w; k < words; ++k)
                        a[static_cast<std::size_t>(i) * words + k] ^=
                            a[static_cast<std::size_t>(r) * words + k];
            ++r;
        }
        return u.pivots + r;
    }

    auto mod = [&](long long v) -> std::uint64_t {
        long long r = v % p;
        return static_cast<std::uint64_t>(r < 0 ? r + p : r);
    };
    std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * cols, 0);
    for (auto& t : mr.triplets()) {
        auto& cell = a[static_cast<std::size_t>(t.row) * cols + t.col];
        cell = (cell + mod(t.value)) % static_cast<std::uint64_t>(p);
    }
    auto powmod = [&](std::uint64_t b, long e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    int r = 0;
    std::uint64_t up = static_cast<std::uint64_t>(p);
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c]) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int k = c; k < cols; ++k)
                std::swap(a[static_cast<std::size_t>(r) * cols + k],
                          a[static_cast<std::size_t>(pivot) * cols + k]);
        std::uint64_t inv = powmod(a[static_cast<std::size_t>(r) * cols + c], p - 2);
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t f = a[static_cast<std::size_t>(i) * cols + c];
            if (!f) continue;
            std::uint64_t mul = (up - f * inv % up) % up;
            const std::uint64_t* src = &a[static_cast<std::size_t>(r) * cols];
            std::uint64_t* dst = &a[static_cast<std::size_t>(i) * cols];
            for (int k = c; k < cols; ++k) dst[k] = (dst[k] + mul * src[k]) % up;
        }
        ++r;
    }
    return u.pivots + r;
}

}  // namespace edgebetti
