#include <qalg/elimination.hpp>

#include <qalg/errors.hpp>

#include <algorithm>
#include <atomic>

namespace qalg {

namespace {
EliminationMode g_default_mode = EliminationMode::Parallel;
}

EliminationMode default_elimination_mode()
{
    return g_default_mode;
}

void set_default_elimination_mode(EliminationMode mode)
{
    g_default_mode = mode;
}

bool Echelon::is_pivot_col(int c) const
{
    return std::binary_search(pivot_cols.begin(), pivot_cols.end(), c);
}

// Both modes walk columns left to right and pick, among the not-yet-pivotal
// rows with a nonzero in the current column, the row with the fewest stored
// entries (ties by row index). The elimination of the other rows is
// independent per row, which is what the parallel mode exploits; the result
// is the same matrix either way.
class Eliminator {
public:
    Eliminator(const SparseMatrix& m, EliminationMode mode) : m_(m), mode_(mode) {}

    Echelon run()
    {
        const int nrows = m_.rows();
        const int ncols = m_.cols();
        std::vector<char> is_pivot_row(nrows, 0);
        std::vector<int> pivot_rows;
        std::vector<int> pivot_cols;

        // Candidate rows per column, maintained as a superset (stale entries
        // are filtered on access). Keeps the pivot search proportional to the
        // actual fill instead of rows x columns.
        std::vector<std::vector<int>> col_rows(ncols);
        for (int r = 0; r < nrows; ++r)
            for (const auto& [c, v] : m_.rows_data_[r])
                col_rows[c].push_back(r);

        for (int col = 0; col < ncols; ++col) {
            std::vector<int>& cand = col_rows[col];
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

            int pivot = -1;
            size_t best_nnz = 0;
            std::vector<int> targets; // includes earlier pivot rows: full RREF
            for (int r : cand) {
                if (!m_.rows_data_[r].count(col))
                    continue;
                targets.push_back(r);
                if (is_pivot_row[r])
                    continue;
                size_t nnz = m_.rows_data_[r].size();
                if (pivot < 0 || nnz < best_nnz) {
                    pivot = r;
                    best_nnz = nnz;
                }
            }
            if (pivot < 0)
                continue;
            targets.erase(std::find(targets.begin(), targets.end(), pivot));

            normalize_row(pivot, col);

            if (mode_ == EliminationMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
                for (size_t t = 0; t < targets.size(); ++t)
                    eliminate_row(targets[t], pivot, col);
            } else {
                for (int r : targets)
                    eliminate_row(r, pivot, col);
            }

            is_pivot_row[pivot] = 1;
            pivot_rows.push_back(pivot);
            pivot_cols.push_back(col);

            // Eliminated rows may have gained entries at the pivot row's
            // columns; register them as candidates there.
            for (const auto& [c, v] : m_.rows_data_[pivot])
                if (c > col)
                    for (int r : targets)
                        col_rows[c].push_back(r);
        }

        // Reorder so pivot rows come first, in pivot-column order.
        Echelon e;
        e.rank = static_cast<int>(pivot_rows.size());
        e.pivot_cols = pivot_cols;
        e.rref = SparseMatrix(nrows, ncols);
        int out = 0;
        for (int r : pivot_rows)
            e.rref.rows_data_[out++] = std::move(m_.rows_data_[r]);
        return e;
    }

private:
    SparseMatrix m_;
    EliminationMode mode_;

    void normalize_row(int r, int col)
    {
        Rational inv = 1 / m_.rows_data_[r].at(col);
        if (inv == 1)
            return;
        for (auto& [c, v] : m_.rows_data_[r])
            v *= inv;
    }

    void eliminate_row(int r, int pivot, int col)
    {
        Rational factor = m_.rows_data_[r].at(col);
        auto& row = m_.rows_data_[r];
        for (const auto& [c, v] : m_.rows_data_[pivot]) {
            auto it = row.find(c);
            if (it == row.end()) {
                row.emplace(c, -factor * v);
            } else {
                it->second -= factor * v;
                if (it->second == 0)
                    row.erase(it);
            }
        }
    }
};

Echelon echelon_form(const SparseMatrix& m, EliminationMode mode)
{
    return Eliminator(m, mode).run();
}

Echelon echelon_form(const SparseMatrix& m)
{
    return echelon_form(m, default_elimination_mode());
}

int rank(const SparseMatrix& m)
{
    return echelon_form(m).rank;
}

SparseMatrix kernel_basis(const SparseMatrix& m)
{
    Echelon e = echelon_form(m);
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!e.is_pivot_col(c))
            free_cols.push_back(c);

    std::vector<int> free_index(m.cols(), -1);
    for (size_t k = 0; k < free_cols.size(); ++k)
        free_index[free_cols[k]] = static_cast<int>(k);

    SparseMatrix basis(m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k)
        basis.set(free_cols[k], static_cast<int>(k), 1);
    for (int i = 0; i < e.rank; ++i)
        for (const auto& [c, v] : e.rref.row(i))
            if (free_index[c] >= 0)
                basis.set(e.pivot_cols[i], free_index[c], -v);
    return basis;
}

SparseMatrix column_space_basis(const SparseMatrix& m)
{
    Echelon e = echelon_form(m);
    SparseMatrix basis(m.rows(), e.rank);
    for (int i = 0; i < e.rank; ++i)
        basis.set_column(i, m.column_vector(e.pivot_cols[i]));
    return basis;
}

int cohomology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out)
{
    if (d_out.cols() != d_in.rows())
        throw CompositionNonzero("cohomology_dim: d_out domain does not match d_in codomain");
    if (!(d_out * d_in).is_zero())
        throw CompositionNonzero("cohomology_dim: d_out o d_in != 0");
    int ker = d_out.cols() - rank(d_out);
    return ker - rank(d_in);
}

} // namespace qalg
