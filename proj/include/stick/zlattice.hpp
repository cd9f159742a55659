#pragma once

// Exact integer linear algebra over arbitrary-precision integers: column
// Hermite normal form, Smith invariant factors, fraction-free determinants and
// certificate-bearing integer system solving.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace stick {

using IntVector = std::vector<mpz_class>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    /// Row-major initializer; all rows must have equal length.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Builds a matrix whose j-th column is columns[j].
    static IntMatrix from_columns(std::span<const IntVector> columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpz_class> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);
/// u^T * M as a row vector.
IntVector left_multiply(const IntVector& u, const IntMatrix& m);
IntVector scaled_sum(const IntMatrix& m, std::span<const mpz_class> x);

struct HnfResult {
    IntMatrix h;
    IntMatrix u;
    /// Row index of the pivot of column j, for j < rank.
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const noexcept { return pivot_rows.size(); }
};

/// Column Hermite normal form: returns (H, U) with M U = H, U unimodular.
/// The first `rank` columns of H carry positive pivots at strictly increasing
/// rows; entries left of a pivot in its row lie in [0, pivot); the remaining
/// columns are zero. Both M U = H and |det U| = 1 are checked before return.
HnfResult hnf(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... of M, min(rows, cols) of them; the
/// number of nonzero entries equals the rank.
std::vector<mpz_class> snf_diagonal(const IntMatrix& m);

/// Exact determinant by Bareiss fraction-free elimination.
/// Throws Error(NotSquare) for non-square input.
mpz_class bareiss_determinant(const IntMatrix& m);

// Outcomes of deciding whether M x = b has an integer solution.

struct Solution {
    IntVector x;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// u^T M = 0 while u^T b != 0: b is outside the rational column span.
struct RationalInfeasible {
    IntVector dual;

    friend bool operator==(const RationalInfeasible&, const RationalInfeasible&) = default;
};

/// b lies in the rational span but not in the lattice. The HNF coordinate
/// `pivot` of the unique rational solution equals `value`, which is not an
/// integer. The certificate (w / denominator) satisfies w^T M = 0 mod
/// denominator while w^T b != 0 mod denominator.
struct NonIntegral {
    std::size_t pivot = 0;
    mpq_class value;
    IntVector dual;
    mpz_class denominator;

    friend bool operator==(const NonIntegral&, const NonIntegral&) = default;
};

using SolveOutcome = std::variant<Solution, RationalInfeasible, NonIntegral>;

/// Checks an outcome's invariant against (M, b) using only integer arithmetic.
bool verify_outcome(const IntMatrix& m, std::span<const mpz_class> b, const SolveOutcome& outcome);

/// Solves M x = b over Z repeatedly against one precomputed HNF.
class LatticeSolver {
public:
    explicit LatticeSolver(IntMatrix m);

    const IntMatrix& matrix() const noexcept { return m_; }
    const HnfResult& hnf() const noexcept { return hnf_; }
    std::size_t rank() const noexcept { return hnf_.rank(); }

    /// Throws Error(DimensionMismatch) if b.size() != rows; Error(InternalInvariant)
    /// if the produced outcome fails verify_outcome.
    SolveOutcome solve(std::span<const mpz_class> b) const;

private:
    IntMatrix m_;
    HnfResult hnf_;
};

SolveOutcome solve_integer(const IntMatrix& m, std::span<const mpz_class> b);

}  // namespace stick
