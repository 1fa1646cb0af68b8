#pragma once

#include <qalg/elimination.hpp>

#include <optional>

namespace qalg {

// One particular solution of A x = b, if any.
std::optional<std::vector<Rational>> solve(const SparseMatrix& a, const std::vector<Rational>& b);

// Solves A X = B columnwise; nullopt if any column is unsolvable.
std::optional<SparseMatrix> solve_matrix(const SparseMatrix& a, const SparseMatrix& b);

// True iff v lies in the column span of basis.
bool in_span(const SparseMatrix& basis, const std::vector<Rational>& v);

// Coordinates of v in the column basis (which must have full column rank);
// nullopt if v is outside the span.
std::optional<std::vector<Rational>> coordinates_in(const SparseMatrix& basis,
                                                    const std::vector<Rational>& v);

// Canonical basis (column-echelon) of the span of the columns of m.
SparseMatrix span_basis(const SparseMatrix& m);

// The subset of columns of `extra` (in order) that enlarge the span of
// `base`; together with base they span span(base|extra).
SparseMatrix complement_in_span(const SparseMatrix& base, const SparseMatrix& extra);

// Canonical quotient of K^n by the column span of `relations` (an n x m
// matrix): the kept coordinates are the non-pivot rows of the column
// echelon form, and projection (k x n) reduces then selects them.
struct QuotientSpace {
    std::vector<int> kept;
    SparseMatrix projection;

    int dim() const { return static_cast<int>(kept.size()); }
};

QuotientSpace quotient_space(const SparseMatrix& relations);

} // namespace qalg
