#pragma once

#include <qalg/sparse_matrix.hpp>

#include <vector>

namespace qalg {

enum class EliminationMode {
    Serial,   // reference implementation, plain row-by-row updates
    Parallel, // OpenMP row updates; bitwise-identical results by construction
};

// Result of reducing a matrix to (reduced) row echelon form.
struct Echelon {
    SparseMatrix rref;          // reduced row echelon form
    std::vector<int> pivot_cols; // pivot column per pivot row, increasing
    int rank = 0;

    bool is_pivot_col(int c) const;
};

// Exact Gaussian elimination with Markowitz-style pivot-row choice inside
// each column (the row with fewest nonzeros wins, ties by index). Column
// order is fixed left to right, so the echelon form is canonical and
// independent of the mode and thread count.
Echelon echelon_form(const SparseMatrix& m, EliminationMode mode);
Echelon echelon_form(const SparseMatrix& m);

int rank(const SparseMatrix& m);

// Basis of the right kernel, one column per free column of m, in canonical
// (RREF-derived) form. m * kernel_basis(m) == 0 exactly.
SparseMatrix kernel_basis(const SparseMatrix& m);

// Basis of the column space: the columns of m sitting at pivot positions.
SparseMatrix column_space_basis(const SparseMatrix& m);

// dim ker(d_out) - rank(d_in), after checking d_out * d_in == 0 exactly.
// Throws CompositionNonzero otherwise.
int cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

// Global default used by the high-level routines. The CLI sets this once.
EliminationMode default_elimination_mode();
void set_default_elimination_mode(EliminationMode mode);

} // namespace qalg
