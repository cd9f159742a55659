#include "stick/zlattice.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "stick/error.hpp"

namespace stick {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix initializer");
        for (long v : r)
            entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::span<const IntVector> columns)
{
    if (columns.empty())
        return {};
    IntMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows())
            throw Error(ErrorCode::DimensionMismatch, "columns of unequal length");
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, c) = columns[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool IntMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const mpz_class& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x)
{
    return scaled_sum(a, x);
}

IntVector scaled_sum(const IntMatrix& m, std::span<const mpz_class> x)
{
    if (x.size() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match column count");
    IntVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r] += m(r, c) * x[c];
    return out;
}

IntVector left_multiply(const IntVector& u, const IntMatrix& m)
{
    if (u.size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "dual vector length does not match row count");
    IntVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (u[r] == 0)
            continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] += u[r] * m(r, c);
    }
    return out;
}

namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        std::swap(m(r, a), m(r, b));
}

void negate_column(IntMatrix& m, std::size_t c)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        m(r, c) = -m(r, c);
}

// col_dst -= q * col_src
void submul_column(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, src) != 0)
            m(r, dst) -= q * m(r, src);
}

// (col_k, col_j) <- (s col_k + t col_j, -b' col_k + a' col_j); determinant 1.
void combine_columns(IntMatrix& m, std::size_t k, std::size_t j, const mpz_class& s, const mpz_class& t,
                     const mpz_class& bq, const mpz_class& aq)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class x = m(r, k);
        mpz_class y = m(r, j);
        m(r, k) = s * x + t * y;
        m(r, j) = aq * y - bq * x;
    }
}

mpz_class lcm_of_denominators(std::span<const mpq_class> v)
{
    mpz_class l = 1;
    for (const auto& q : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

IntVector scale_to_integers(std::span<const mpq_class> v, const mpz_class& d)
{
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpq_class s = v[i] * d;
        out[i] = s.get_num();
    }
    return out;
}

bool divisible(const mpz_class& a, const mpz_class& d)
{
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

HnfResult hnf(const IntMatrix& m)
{
    HnfResult res{m, IntMatrix::identity(m.cols()), {}};
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    const std::size_t n = m.cols();
    std::size_t k = 0;
    mpz_class g, s, t, aq, bq;
    for (std::size_t r = 0; r < m.rows() && k < n; ++r) {
        for (std::size_t j = k + 1; j < n; ++j) {
            if (h(r, j) == 0)
                continue;
            if (h(r, k) == 0) {
                swap_columns(h, k, j);
                swap_columns(u, k, j);
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, k).get_mpz_t(), h(r, j).get_mpz_t());
            mpz_divexact(aq.get_mpz_t(), h(r, k).get_mpz_t(), g.get_mpz_t());
            mpz_divexact(bq.get_mpz_t(), h(r, j).get_mpz_t(), g.get_mpz_t());
            combine_columns(h, k, j, s, t, bq, aq);
            combine_columns(u, k, j, s, t, bq, aq);
        }
        if (h(r, k) == 0)
            continue;
        if (h(r, k) < 0) {
            negate_column(h, k);
            negate_column(u, k);
        }
        mpz_class q;
        for (std::size_t j = 0; j < k; ++j) {
            mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), h(r, k).get_mpz_t());
            if (q != 0) {
                submul_column(h, j, k, q);
                submul_column(u, j, k, q);
            }
        }
        res.pivot_rows.push_back(r);
        ++k;
    }

    if (!(m * u == h))
        throw Error(ErrorCode::InternalInvariant, "hnf: M*U != H");
    mpz_class det = bareiss_determinant(u);
    if (det != 1 && det != -1)
        throw Error(ErrorCode::InternalInvariant, "hnf: transform is not unimodular");
    return res;
}

std::vector<mpz_class> snf_diagonal(const IntMatrix& m)
{
    IntMatrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    std::vector<mpz_class> diag(n);
    mpz_class q;
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                return diag;  // trailing block is zero
            if (pr != t)
                for (std::size_t j = 0; j < cols; ++j)
                    std::swap(a(pr, j), a(t, j));
            if (pc != t)
                swap_columns(a, pc, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < cols; ++j)
                    a(i, j) -= q * a(t, j);
                clean = clean && a(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < rows; ++i)
                    a(i, j) -= q * a(i, t);
                clean = clean && a(t, j) == 0;
            }
            if (!clean)
                continue;

            // Enforce d_t | every remaining entry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!divisible(a(i, j), a(t, t))) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a(t, j) += a(bad, j);
        }
        diag[t] = abs(a(t, t));
    }
    return diag;
}

mpz_class bareiss_determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::NotSquare,
                    "determinant of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a(i, k) == 0)
                ++i;
            if (i == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(i, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool verify_outcome(const IntMatrix& m, std::span<const mpz_class> b, const SolveOutcome& outcome)
{
    if (b.size() != m.rows())
        return false;
    auto dot = [&](const IntVector& u) {
        mpz_class s = 0;
        for (std::size_t r = 0; r < b.size(); ++r)
            s += u[r] * b[r];
        return s;
    };
    if (const auto* sol = std::get_if<Solution>(&outcome)) {
        if (sol->x.size() != m.cols())
            return false;
        IntVector mx = scaled_sum(m, sol->x);
        return std::equal(mx.begin(), mx.end(), b.begin(), b.end());
    }
    if (const auto* inf = std::get_if<RationalInfeasible>(&outcome)) {
        if (inf->dual.size() != m.rows())
            return false;
        IntVector um = left_multiply(inf->dual, m);
        bool annihilates = std::all_of(um.begin(), um.end(), [](const mpz_class& v) { return v == 0; });
        return annihilates && dot(inf->dual) != 0;
    }
    const auto& ni = std::get<NonIntegral>(outcome);
    if (ni.dual.size() != m.rows() || ni.denominator <= 1 || ni.value.get_den() == 1)
        return false;
    IntVector wm = left_multiply(ni.dual, m);
    for (const auto& v : wm)
        if (!divisible(v, ni.denominator))
            return false;
    mpz_class wb = dot(ni.dual);
    if (divisible(wb, ni.denominator))
        return false;
    mpq_class q(wb, ni.denominator);
    q.canonicalize();
    return q == ni.value;
}

LatticeSolver::LatticeSolver(IntMatrix m) : m_(std::move(m)), hnf_(stick::hnf(m_)) {}

SolveOutcome LatticeSolver::solve(std::span<const mpz_class> b) const
{
    if (b.size() != m_.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "right-hand side has " + std::to_string(b.size()) + " entries, matrix has "
                        + std::to_string(m_.rows()) + " rows");
    const IntMatrix& h = hnf_.h;
    const auto& piv = hnf_.pivot_rows;
    const std::size_t rank = piv.size();

    // Rational solution in HNF coordinates by forward substitution.
    std::vector<mpq_class> y(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        mpq_class acc = b[piv[i]];
        for (std::size_t j = 0; j < i; ++j)
            acc -= h(piv[i], j) * y[j];
        y[i] = acc / h(piv[i], i);
        y[i].canonicalize();
    }

    // Solves c H_P = target over the first `rank` columns, where H_P is the
    // lower-triangular pivot block.
    auto left_solve = [&](const std::vector<mpq_class>& target) {
        std::vector<mpq_class> c(rank);
        for (std::size_t j = rank; j-- > 0;) {
            mpq_class acc = target[j];
            for (std::size_t i = j + 1; i < rank; ++i)
                acc -= c[i] * h(piv[i], j);
            c[j] = acc / h(piv[j], j);
            c[j].canonicalize();
        }
        return c;
    };

    std::size_t next_pivot = 0;
    for (std::size_t r = 0; r < m_.rows(); ++r) {
        if (next_pivot < rank && piv[next_pivot] == r) {
            ++next_pivot;
            continue;
        }
        mpq_class residual = b[r];
        for (std::size_t j = 0; j < rank; ++j)
            residual -= h(r, j) * y[j];
        if (residual == 0)
            continue;
        std::vector<mpq_class> target(rank);
        for (std::size_t j = 0; j < rank; ++j)
            target[j] = h(r, j);
        std::vector<mpq_class> c = left_solve(target);
        std::vector<mpq_class> u(m_.rows());
        u[r] = 1;
        for (std::size_t j = 0; j < rank; ++j)
            u[piv[j]] -= c[j];
        RationalInfeasible out{scale_to_integers(u, lcm_of_denominators(u))};
        if (!verify_outcome(m_, b, out))
            throw Error(ErrorCode::InternalInvariant, "infeasibility certificate failed verification");
        return out;
    }

    for (std::size_t i = 0; i < rank; ++i) {
        if (y[i].get_den() == 1)
            continue;
        std::vector<mpq_class> e(rank);
        e[i] = 1;
        std::vector<mpq_class> w = left_solve(e);
        std::vector<mpq_class> full(m_.rows());
        for (std::size_t j = 0; j < rank; ++j)
            full[piv[j]] = w[j];
        mpz_class d = lcm_of_denominators(full);
        NonIntegral out{i, y[i], scale_to_integers(full, d), d};
        if (!verify_outcome(m_, b, out))
            throw Error(ErrorCode::InternalInvariant, "non-integrality certificate failed verification");
        return out;
    }

    IntVector x(m_.cols());
    for (std::size_t c = 0; c < m_.cols(); ++c)
        for (std::size_t j = 0; j < rank; ++j)
            x[c] += hnf_.u(c, j) * y[j].get_num();
    Solution out{std::move(x)};
    if (!verify_outcome(m_, b, out))
        throw Error(ErrorCode::InternalInvariant, "integer solution failed verification");
    return out;
}

SolveOutcome solve_integer(const IntMatrix& m, std::span<const mpz_class> b)
{
    return LatticeSolver(m).solve(b);
}

}  // namespace stick
