#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stick/error.hpp"
#include "stick/group_ring.hpp"
#include "stick/zlattice.hpp"

using namespace stick;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

// Shape conditions of column HNF, checked independently of hnf()'s own checks.
void check_hnf_shape(const IntMatrix& m, const HnfResult& res)
{
    const IntMatrix& h = res.h;
    CHECK(m * res.u == h);
    mpz_class det = bareiss_determinant(res.u);
    CHECK((det == 1 || det == -1));
    const std::size_t rank = res.rank();
    CHECK(rank == oracle::rational_rank(m));
    for (std::size_t j = 0; j < rank; ++j) {
        std::size_t r = res.pivot_rows[j];
        if (j > 0)
            CHECK(r > res.pivot_rows[j - 1]);
        CHECK(h(r, j) > 0);
        for (std::size_t i = 0; i < r; ++i)
            CHECK(h(i, j) == 0);
        for (std::size_t k = 0; k < j; ++k) {
            CHECK(h(r, k) >= 0);
            CHECK(h(r, k) < h(r, j));
        }
    }
    for (std::size_t j = rank; j < h.cols(); ++j)
        for (std::size_t r = 0; r < h.rows(); ++r)
            CHECK(h(r, j) == 0);
}

IntVector to_ints(const std::vector<long>& v)
{
    return IntVector(v.begin(), v.end());
}

}  // namespace

TEST_CASE("hnf examples")
{
    auto id = IntMatrix::identity(4);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IntMatrix row{{4, 2}};
    r = hnf(row);
    CHECK(r.h == IntMatrix{{2, 0}});
    check_hnf_shape(row, r);

    IntMatrix zero(3, 2);
    r = hnf(zero);
    CHECK(r.h == zero);
    CHECK(r.u == IntMatrix::identity(2));
    CHECK(r.rank() == 0);
}

TEST_CASE("property: hnf postconditions on random matrices")
{
    std::mt19937_64 rng(0x1a77ce);
    for (int n = 0; n < 250; ++n) {
        std::size_t rows = 1 + rng() % 7, cols = 1 + rng() % 6;
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        if (rng() % 4 == 0)  // force some rank deficiency
            for (std::size_t r = 0; r < rows; ++r)
                m(r, cols - 1) = 2 * m(r, 0);
        check_hnf_shape(m, hnf(m));
    }
}

TEST_CASE("snf examples")
{
    CHECK(snf_diagonal(IntMatrix::identity(3)) == std::vector<mpz_class>{1, 1, 1});
    CHECK(snf_diagonal(IntMatrix{{2, 0}, {0, 4}}) == std::vector<mpz_class>{2, 4});
    CHECK(snf_diagonal(IntMatrix{{4, 0}, {0, 6}}) == std::vector<mpz_class>{2, 12});
    CHECK(snf_diagonal(IntMatrix{{0, 0}, {0, 0}}) == std::vector<mpz_class>{0, 0});
    CHECK(snf_diagonal(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<mpz_class>{2, 6, 12});
}

TEST_CASE("snf of the l=23 Kummer matrix has 12 nonzero factors")
{
    CyclotomicModulus m(23);
    std::vector<IntVector> cols;
    for (std::int64_t i = 1; i <= 11; ++i)
        cols.push_back(kummer_f(m, i).coeffs());
    cols.push_back(trace_element(m).coeffs());
    IntMatrix k = IntMatrix::from_columns(cols);
    auto d = snf_diagonal(k);
    CHECK(d.size() == 12);
    std::size_t nonzero = std::count_if(d.begin(), d.end(), [](const mpz_class& x) { return x != 0; });
    CHECK(nonzero == 12);
    CHECK(oracle::rational_rank(k) == 12);
}

TEST_CASE("property: snf divisibility chain and rank")
{
    std::mt19937_64 rng(0x5aff);
    for (int n = 0; n < 200; ++n) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, rows, cols, -6, 6);
        auto d = snf_diagonal(m);
        REQUIRE(d.size() == std::min(rows, cols));
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
            CHECK(d[i] >= 0);
            if (d[i] != 0)
                ++nonzero;
            if (i + 1 < d.size() && d[i] != 0)
                CHECK(d[i + 1] % d[i] == 0);
            if (d[i] == 0 && i + 1 < d.size())
                CHECK(d[i + 1] == 0);
        }
        CHECK(nonzero == oracle::rational_rank(m));
        if (rows == cols) {
            mpz_class prod = 1;
            for (auto& x : d)
                prod *= x;
            CHECK(prod == abs(bareiss_determinant(m)));
        }
    }
}

TEST_CASE("bareiss determinant")
{
    CHECK(bareiss_determinant(IntMatrix::identity(5)) == 1);
    CHECK(bareiss_determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(bareiss_determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(bareiss_determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(bareiss_determinant(IntMatrix(2, 3)), Error);

    std::mt19937_64 rng(0xde7);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int n = 0; n < 60; ++n) {
        std::vector<std::vector<long>> a(5, std::vector<long>(5));
        IntMatrix m(5, 5);
        for (std::size_t r = 0; r < 5; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                a[r][c] = (n % 5 == 0 && c == 0) ? 0 : d(rng);  // some leading zero pivots
                m(r, c) = a[r][c];
            }
        CHECK(bareiss_determinant(m) == oracle::cofactor_det(a));
    }
}

TEST_CASE("solve_integer examples")
{
    IntVector b{5, -7, 11};
    SolveOutcome o = solve_integer(IntMatrix::identity(3), b);
    REQUIRE(std::holds_alternative<Solution>(o));
    CHECK(std::get<Solution>(o).x == b);

    o = solve_integer(IntMatrix{{2}}, IntVector{3});
    REQUIRE(std::holds_alternative<NonIntegral>(o));
    CHECK(std::get<NonIntegral>(o).pivot == 0);
    CHECK(std::get<NonIntegral>(o).value == mpq_class(3, 2));

    o = solve_integer(IntMatrix{{1}, {0}}, IntVector{0, 1});
    REQUIRE(std::holds_alternative<RationalInfeasible>(o));
    CHECK(std::get<RationalInfeasible>(o).dual == IntVector{0, 1});

    CHECK_THROWS_AS(solve_integer(IntMatrix{{1}, {0}}, IntVector{1}), Error);
}

TEST_CASE("certificate checker rejects forged certificates")
{
    IntMatrix m{{1, 0}, {0, 2}, {1, 1}};
    IntVector b{1, 1, 0};
    CHECK_FALSE(verify_outcome(m, b, Solution{{1, 0}}));
    CHECK_FALSE(verify_outcome(m, b, RationalInfeasible{{0, 0, 0}}));
    CHECK_FALSE(verify_outcome(m, b, NonIntegral{0, mpq_class(1, 2), {0, 1, 0}, 1}));
    CHECK_FALSE(verify_outcome(m, b, Solution{{1}}));
}

TEST_CASE("property: solve_integer agrees with bounded exhaustive search")
{
    std::mt19937_64 rng(0xb0c5);
    int solved = 0, refuted = 0;
    for (int n = 0; n < 300; ++n) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        std::vector<long> b(rows);
        if (rng() % 2) {
            // b = M x for a small x so that a bounded solution exists
            std::vector<long> x(cols);
            for (auto& v : x)
                v = long(rng() % 5) - 2;
            for (std::size_t r = 0; r < rows; ++r) {
                long s = 0;
                for (std::size_t c = 0; c < cols; ++c)
                    s += m(r, c).get_si() * x[c];
                b[r] = s;
            }
        } else {
            for (auto& v : b)
                v = long(rng() % 11) - 5;
        }
        SolveOutcome o = solve_integer(m, to_ints(b));
        CHECK(verify_outcome(m, to_ints(b), o));
        auto brute = oracle::exhaustive_solve(m, b, 10);
        if (brute) {
            CHECK(std::holds_alternative<Solution>(o));
            ++solved;
        }
        if (!std::holds_alternative<Solution>(o)) {
            CHECK_FALSE(brute.has_value());
            ++refuted;
        }
    }
    CHECK(solved > 50);
    CHECK(refuted > 50);
}

TEST_CASE("property: certificates re-verify by direct integer arithmetic")
{
    std::mt19937_64 rng(0xce27);
    for (int n = 0; n < 200; ++n) {
        std::size_t rows = 2 + rng() % 6, cols = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, rows, cols, -5, 5);
        IntVector b(rows);
        for (auto& v : b)
            v = long(rng() % 11) - 5;
        SolveOutcome o = solve_integer(m, b);
        if (auto* s = std::get_if<Solution>(&o)) {
            for (std::size_t r = 0; r < rows; ++r) {
                mpz_class acc = 0;
                for (std::size_t c = 0; c < cols; ++c)
                    acc += m(r, c) * s->x[c];
                CHECK(acc == b[r]);
            }
        } else if (auto* inf = std::get_if<RationalInfeasible>(&o)) {
            mpz_class ub = 0;
            for (std::size_t r = 0; r < rows; ++r)
                ub += inf->dual[r] * b[r];
            CHECK(ub != 0);
            for (std::size_t c = 0; c < cols; ++c) {
                mpz_class um = 0;
                for (std::size_t r = 0; r < rows; ++r)
                    um += inf->dual[r] * m(r, c);
                CHECK(um == 0);
            }
        } else {
            const auto& ni = std::get<NonIntegral>(o);
            mpq_class wb = 0;
            for (std::size_t r = 0; r < rows; ++r)
                wb += mpq_class(ni.dual[r]) * b[r];
            wb /= ni.denominator;
            CHECK(wb == ni.value);
            CHECK(wb.get_den() != 1);
            for (std::size_t c = 0; c < cols; ++c) {
                mpq_class wm = 0;
                for (std::size_t r = 0; r < rows; ++r)
                    wm += mpq_class(ni.dual[r]) * m(r, c);
                wm /= ni.denominator;
                CHECK(wm.get_den() == 1);
            }
        }
    }
}

TEST_CASE("lattice solver reuse")
{
    LatticeSolver s(IntMatrix{{2, 0}, {0, 3}, {0, 0}});
    CHECK(s.rank() == 2);
    CHECK(std::holds_alternative<Solution>(s.solve(IntVector{4, 9, 0})));
    CHECK(std::holds_alternative<NonIntegral>(s.solve(IntVector{4, 8, 0})));
    CHECK(std::holds_alternative<RationalInfeasible>(s.solve(IntVector{4, 9, 1})));
}
