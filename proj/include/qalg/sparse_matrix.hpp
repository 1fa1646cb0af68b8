#pragma once

#include <qalg/rational.hpp>

#include <initializer_list>
#include <map>
#include <vector>

namespace qalg {

// Sparse matrix over Q. Rows hold column -> value maps; zero values are
// never stored. Indices are checked against the declared shape.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    static SparseMatrix identity(int n);
    static SparseMatrix zero(int rows, int cols);
    // Row-major dense initializer, for tests and small fixtures.
    static SparseMatrix dense(std::initializer_list<std::initializer_list<long>> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const;
    void set(int r, int c, const Rational& v);
    void add_to(int r, int c, const Rational& v);
    bool is_zero() const;
    int nnz() const;

    const std::map<int, Rational>& row(int r) const { return rows_data_[r]; }

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& other) const;
    SparseMatrix operator+(const SparseMatrix& other) const;
    SparseMatrix operator-(const SparseMatrix& other) const;
    SparseMatrix operator*(const Rational& s) const;
    bool operator==(const SparseMatrix& other) const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    // Columns [c0, c0+n) as a new matrix.
    SparseMatrix columns(int c0, int n) const;
    SparseMatrix column(int c) const { return columns(c, 1); }
    std::vector<Rational> column_vector(int c) const;
    void set_column(int c, const std::vector<Rational>& v);

    // Horizontal concatenation [this | other].
    SparseMatrix hcat(const SparseMatrix& other) const;
    // Vertical concatenation [this ; other].
    SparseMatrix vcat(const SparseMatrix& other) const;

    static SparseMatrix from_column(const std::vector<Rational>& v);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::map<int, Rational>> rows_data_;

    void check(int r, int c) const;
    friend class Eliminator;
};

} // namespace qalg
