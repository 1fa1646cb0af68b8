#include <qalg/solve.hpp>

namespace qalg {

std::optional<std::vector<Rational>> solve(const SparseMatrix& a, const std::vector<Rational>& b)
{
    SparseMatrix aug = a.hcat(SparseMatrix::from_column(b));
    Echelon e = echelon_form(aug);
    // Inconsistent iff the augmented column is pivotal.
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols(), Rational(0));
    for (int i = 0; i < e.rank; ++i)
        x[e.pivot_cols[i]] = e.rref.at(i, a.cols());
    return x;
}

std::optional<SparseMatrix> solve_matrix(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows() != b.rows())
        return std::nullopt;
    SparseMatrix aug = a.hcat(b);
    Echelon e = echelon_form(aug);
    for (int c : e.pivot_cols)
        if (c >= a.cols())
            return std::nullopt;
    SparseMatrix x(a.cols(), b.cols());
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < b.cols(); ++j) {
            const Rational& v = e.rref.at(i, a.cols() + j);
            if (v != 0)
                x.set(e.pivot_cols[i], j, v);
        }
    return x;
}

bool in_span(const SparseMatrix& basis, const std::vector<Rational>& v)
{
    return solve(basis, v).has_value();
}

std::optional<std::vector<Rational>> coordinates_in(const SparseMatrix& basis,
                                                    const std::vector<Rational>& v)
{
    return solve(basis, v);
}

SparseMatrix span_basis(const SparseMatrix& m)
{
    // Canonical: column-echelon form via RREF of the transpose.
    Echelon e = echelon_form(m.transpose());
    SparseMatrix basis(m.rows(), e.rank);
    for (int i = 0; i < e.rank; ++i)
        for (int c = 0; c < m.rows(); ++c) {
            const Rational& v = e.rref.at(i, c);
            if (v != 0)
                basis.set(c, i, v);
        }
    return basis;
}

SparseMatrix complement_in_span(const SparseMatrix& base, const SparseMatrix& extra)
{
    SparseMatrix out(base.rows(), extra.cols());
    SparseMatrix acc = base;
    int written = 0;
    int r = rank(acc);
    for (int c = 0; c < extra.cols(); ++c) {
        SparseMatrix cand = acc.hcat(extra.columns(c, 1));
        int r2 = rank(cand);
        if (r2 > r) {
            out.set_column(written++, extra.column_vector(c));
            acc = cand;
            r = r2;
        }
    }
    return out.columns(0, written);
}

QuotientSpace quotient_space(const SparseMatrix& relations)
{
    int n = relations.rows();
    Echelon e = echelon_form(relations.transpose());
    QuotientSpace q;
    for (int r = 0; r < n; ++r)
        if (!e.is_pivot_col(r))
            q.kept.push_back(r);
    // Reduce by the echelon rows (leading coefficient 1 at pivot), then
    // select the kept coordinates: projection row i = e_{kept[i]} reduced.
    q.projection = SparseMatrix(q.dim(), n);
    for (int i = 0; i < q.dim(); ++i)
        q.projection.set(i, q.kept[i], Rational(1));
    // v mod relations: subtract v[pivot] * (echelon row) for each pivot.
    // As a matrix: proj = S (I - sum_p E_row(p)), applied columnwise.
    for (int i = 0; i < q.dim(); ++i) {
        // kept coordinate is untouched by reduction only if echelon rows
        // have zero entries there... they do not in general, so fold in
        // the correction: coordinate of e_c after reduction, at kept[i].
        for (int pr = 0; pr < e.rank; ++pr) {
            int pc = e.pivot_cols[pr];
            const Rational& w = e.rref.at(pr, q.kept[i]);
            if (w != 0)
                q.projection.add_to(i, pc, -w);
        }
    }
    return q;
}

} // namespace qalg
