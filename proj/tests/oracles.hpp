#pragma once

// Test-only reference computations. Everything here is deliberately naive and
// shares no code path with the library beyond the IntMatrix container.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "stick/zlattice.hpp"

namespace oracle {

inline std::int64_t brute_inverse(std::int64_t a, std::int64_t ell)
{
    for (std::int64_t b = 1; b < ell; ++b)
        if ((a * b) % ell == 1)
            return b;
    return 0;
}

inline std::int64_t brute_order(std::int64_t p, std::int64_t ell)
{
    std::int64_t r = ((p % ell) + ell) % ell, x = r;
    for (std::int64_t k = 1; k < ell; ++k) {
        if (x == 1)
            return k;
        x = (x * r) % ell;
    }
    return 0;
}

inline bool brute_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::vector<std::int64_t> odd_primes_below(std::int64_t bound)
{
    std::vector<std::int64_t> out;
    for (std::int64_t n = 3; n < bound; n += 2)
        if (brute_prime(n))
            out.push_back(n);
    return out;
}

/// sum_{i=1}^{l-1} floor(a i / l), summed directly.
inline mpz_class floor_sum(std::int64_t a, std::int64_t ell)
{
    mpz_class s = 0;
    for (std::int64_t i = 1; i < ell; ++i)
        s += mpz_class(a) * i / ell;  // nonnegative, so truncation = floor
    return s;
}

/// Rank by Gaussian elimination over Q.
inline std::size_t rational_rank(const stick::IntMatrix& m)
{
    std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0)
            ++p;
        if (p == m.rows())
            continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            mpq_class k = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < m.cols(); ++j)
                a[r][j] -= k * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Determinant by Laplace expansion along the first row.
inline mpz_class cofactor_det(const std::vector<std::vector<long>>& a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    mpz_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<long>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(a[r][c]);
            minor.push_back(row);
        }
        mpz_class term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : mpz_class(-term);
    }
    return det;
}

/// Some x in [-box, box]^cols with M x = b, if one exists.
inline std::optional<std::vector<long>> exhaustive_solve(const stick::IntMatrix& m, const std::vector<long>& b,
                                                         long box)
{
    std::vector<long> x(m.cols(), -box);
    for (;;) {
        bool ok = true;
        for (std::size_t r = 0; r < m.rows() && ok; ++r) {
            mpz_class s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c)
                s += m(r, c) * x[c];
            ok = (s == b[r]);
        }
        if (ok)
            return x;
        std::size_t i = 0;
        while (i < x.size() && x[i] == box)
            x[i++] = -box;
        if (i == x.size())
            return std::nullopt;
        ++x[i];
    }
}

/// Prime factorization by trial division.
inline std::map<mpz_class, long> trial_factor(mpz_class n)
{
    std::map<mpz_class, long> out;
    n = abs(n);
    for (mpz_class d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            ++out[d];
            n /= d;
        }
    if (n > 1)
        ++out[n];
    return out;
}

/// a >= 0 and every prime p != l has f_p | v_p(a): the closed-form criterion
/// for |N(x)| = a over Q(zeta_23).
inline bool closed_form_norm_predicate(const mpq_class& a, std::int64_t ell)
{
    if (a < 0)
        return false;
    if (a == 0)
        return true;
    for (const mpz_class& part : {a.get_num(), a.get_den()})
        for (const auto& [p, e] : trial_factor(part)) {
            if (p == ell)
                continue;
            if (e % brute_order(mpz_class(p % ell).get_si(), ell) != 0)
                return false;
        }
    return true;
}

/// Determinant over Q by elimination, for the norm oracle below.
inline mpz_class rational_det(std::vector<std::vector<mpq_class>> a)
{
    const std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            mpq_class k = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j)
                a[r][j] -= k * a[c][j];
        }
    }
    return det.get_num();
}

/// N(x) for x = sum_i coeffs[i] zeta^i in Z[zeta_l], as the determinant of
/// multiplication by x on the power basis 1, zeta, ..., zeta^{l-2}.
inline mpz_class cyclotomic_norm(const std::vector<long>& coeffs, std::int64_t ell)
{
    const std::size_t n = static_cast<std::size_t>(ell - 1);
    // reduce a polynomial of degree < l using zeta^{l-1} = -(1 + ... + zeta^{l-2})
    auto reduce = [&](std::vector<mpq_class> p) {
        p.resize(static_cast<std::size_t>(ell));
        mpq_class top = p[n];
        for (std::size_t i = 0; i < n; ++i)
            p[i] -= top;
        p.resize(n);
        return p;
    };
    std::vector<std::vector<mpq_class>> mat(n, std::vector<mpq_class>(n));
    for (std::size_t j = 0; j < n; ++j) {
        // x * zeta^j
        std::vector<mpq_class> prod(static_cast<std::size_t>(ell));
        for (std::size_t i = 0; i < coeffs.size() && i < n; ++i)
            prod[(i + j) % static_cast<std::size_t>(ell)] += coeffs[i];
        auto col = reduce(prod);
        for (std::size_t i = 0; i < n; ++i)
            mat[i][j] = col[i];
    }
    return rational_det(mat);
}

}  // namespace oracle
