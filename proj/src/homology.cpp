#include "edgebetti/homology.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace edgebetti {

ChainComplexZ chain_complex(const SimplicialComplex& d) {
    ChainComplexZ c;
    if (d.is_void()) return c;
    c.dims = d.dim();
    for (int k = 0; k <= c.dims; ++k) {
        const auto& faces = d.faces(k);
        const auto& below = d.faces(k - 1);
        std::unordered_map<std::uint64_t, int> index;
        index.reserve(below.size());
        for (std::size_t i = 0; i < below.size(); ++i) index.emplace(below[i], static_cast<int>(i));
        IntegerMatrix m(static_cast<int>(below.size()), static_cast<int>(faces.size()));
        for (std::size_t j = 0; j < faces.size(); ++j) {
            int sign = 1, pos = 0;
            for (std::uint64_t rest = faces[j]; rest; ++pos) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t sub = faces[j] & ~(std::uint64_t{1} << v);
                m.add(index.at(sub), static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        c.boundary.push_back(std::move(m));
    }
    return c;
}

std::vector<HomologyGroup> integral_reduced_homology(const SimplicialComplex& d) {
    std::vector<HomologyGroup> out;
    if (d.is_void()) return out;
    ChainComplexZ c = chain_complex(d);
    std::vector<SmithForm> snf(c.boundary.size());
    for (std::size_t k = 0; k < c.boundary.size(); ++k) snf[k] = smith_normal_form(c.boundary[k]);
    for (int j = -1; j <= c.dims; ++j) {
        HomologyGroup h;
        h.degree = j;
        long long faces_j = (j == -1) ? 1 : c.boundary[j].cols();
        long long rank_j = (j == -1) ? 0 : snf[j].rank;
        long long rank_up = (j + 1 <= c.dims) ? snf[j + 1].rank : 0;
        h.free_rank = faces_j - rank_j - rank_up;
        if (j + 1 <= c.dims)
            for (auto& f : snf[j + 1].invariant_factors)
                if (f > 1) h.torsion.push_back(f);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<long long> field_homology_dims(const SimplicialComplex& d, Field field) {
    std::vector<long long> out;
    if (d.is_void()) return out;
    if (field.ch != 0 && !is_prime(field.ch))
        throw std::invalid_argument("field_homology_dims: characteristic must be 0 or prime");
    ChainComplexZ c = chain_complex(d);
    std::vector<int> rank(c.boundary.size());
    for (std::size_t k = 0; k < c.boundary.size(); ++k)
        rank[k] = field.ch == 0 ? rank_rational(c.boundary[k]) : rank_mod_p(c.boundary[k], field.ch);
    for (int j = -1; j <= c.dims; ++j) {
        long long faces_j = (j == -1) ? 1 : c.boundary[j].cols();
        long long rank_j = (j == -1) ? 0 : rank[j];
        long long rank_up = (j + 1 <= c.dims) ? rank[j + 1] : 0;
        out.push_back(faces_j - rank_j - rank_up);
    }
    return out;
}

std::set<long> prime_divisors(const mpz_class& n) {
    std::set<long> out;
    mpz_class m = abs(n);
    for (long p = 2; mpz_class(p) * p <= m; p == 2 ? p = 3 : p += 2)
        if (m % p == 0) {
            out.insert(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) {
        if (!m.fits_slong_p())
            throw std::overflow_error("prime_divisors: factor exceeds long range");
        out.insert(m.get_si());
    }
    return out;
}

std::set<long> torsion_primes(const SimplicialComplex& d) {
    std::set<long> out;
    for (auto& h : integral_reduced_homology(d))
        for (auto& f : h.torsion)
            for (long p : prime_divisors(f)) out.insert(p);
    return out;
}

}  // namespace edgebetti
