#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qalg/elimination.hpp>
#include <qalg/errors.hpp>
#include <qalg/solve.hpp>

#include <random>

using namespace qalg;

namespace {

SparseMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int percent_fill)
{
    SparseMatrix m(rows, cols);
    std::uniform_int_distribution<int> fill(0, 99);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (fill(rng) < percent_fill) {
                Rational v = rat(num(rng), den(rng));
                if (v != 0)
                    m.set(r, c, v);
            }
    return m;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(parse_rational("3/2") == rat(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-4/6") == rat(-2, 3));
    CHECK(to_string(rat(10, -4)) == "-5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("sparse matrix basics")
{
    SparseMatrix m = SparseMatrix::dense({{1, 2}, {3, 4}});
    CHECK(m.at(0, 1) == 2);
    CHECK(m.nnz() == 4);
    m.add_to(0, 1, Rational(-2));
    CHECK(m.nnz() == 3); // zeros are erased
    SparseMatrix i2 = SparseMatrix::identity(2);
    CHECK(m * i2 == m);
    CHECK((m - m).is_zero());
    CHECK(m.transpose().transpose() == m);
}

TEST_CASE("echelon form is canonical and exact")
{
    SparseMatrix m = SparseMatrix::dense({{2, 4, 6}, {1, 2, 4}, {0, 0, 2}});
    Echelon e = echelon_form(m);
    CHECK(e.rank == 2);
    CHECK(e.pivot_cols == std::vector<int>{0, 2});
    // RREF rows: leading ones, zeros above pivots.
    CHECK(e.rref.at(0, 0) == 1);
    CHECK(e.rref.at(0, 1) == 2);
    CHECK(e.rref.at(0, 2) == 0);
    CHECK(e.rref.at(1, 2) == 1);
}

TEST_CASE("serial and parallel elimination agree bitwise")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 12; ++trial) {
        SparseMatrix m = random_matrix(rng, 18, 25, 35);
        Echelon a = echelon_form(m, EliminationMode::Serial);
        Echelon b = echelon_form(m, EliminationMode::Parallel);
        CHECK(a.rank == b.rank);
        CHECK(a.pivot_cols == b.pivot_cols);
        CHECK(a.rref == b.rref);
    }
}

TEST_CASE("kernel basis is exact")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 8; ++trial) {
        SparseMatrix m = random_matrix(rng, 10, 14, 40);
        SparseMatrix k = kernel_basis(m);
        CHECK(k.cols() == m.cols() - rank(m));
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("rank properties")
{
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 6; ++trial) {
        SparseMatrix a = random_matrix(rng, 8, 8, 50);
        CHECK(rank(a) == rank(a.transpose()));
        SparseMatrix b = random_matrix(rng, 8, 8, 50);
        CHECK(rank(a * b) <= std::min(rank(a), rank(b)));
    }
}

TEST_CASE("solve round trip")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        SparseMatrix a = random_matrix(rng, 9, 6, 45);
        SparseMatrix x = random_matrix(rng, 6, 1, 80);
        auto sol = solve(a, (a * x).column_vector(0));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == (a * x).column_vector(0));
    }
    // An inconsistent system.
    SparseMatrix a = SparseMatrix::dense({{1, 0}, {1, 0}});
    CHECK_FALSE(solve(a, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("span basis and complements")
{
    SparseMatrix v = SparseMatrix::dense({{1, 2, 3}, {0, 1, 1}, {1, 3, 4}});
    SparseMatrix b = span_basis(v);
    CHECK(b.cols() == 2);
    CHECK(in_span(b, v.column_vector(2)));
    // span_basis is idempotent on its own output.
    CHECK(span_basis(b) == b);

    SparseMatrix base = SparseMatrix::dense({{1}, {0}, {1}});
    SparseMatrix extra = SparseMatrix::dense({{2}, {0}, {2}}).hcat(
        SparseMatrix::dense({{0}, {1}, {0}}));
    SparseMatrix c = complement_in_span(base, extra);
    CHECK(c.cols() == 1);
    CHECK(c.at(1, 0) == 1);
}

TEST_CASE("quotient space")
{
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 6; ++trial) {
        SparseMatrix rel = random_matrix(rng, 9, 4, 55);
        QuotientSpace q = quotient_space(rel);
        CHECK(q.dim() == 9 - rank(rel));
        CHECK((q.projection * rel).is_zero());
        // projection restricted to kept coordinates is the identity.
        for (int i = 0; i < q.dim(); ++i)
            for (int j = 0; j < q.dim(); ++j)
                CHECK(q.projection.at(i, q.kept[j]) == (i == j ? 1 : 0));
    }
}

TEST_CASE("cohomology dimension checks composition")
{
    SparseMatrix d0 = SparseMatrix::dense({{1}, {0}});
    SparseMatrix d1 = SparseMatrix::dense({{0, 1}});
    CHECK(cohomology_dim(d0, d1) == 0);
    SparseMatrix bad = SparseMatrix::dense({{1, 0}});
    CHECK_THROWS_AS(cohomology_dim(d0, bad), CompositionNonzero);
}
