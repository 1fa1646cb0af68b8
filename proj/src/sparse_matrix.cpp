#include <qalg/sparse_matrix.hpp>

#include <stdexcept>

namespace qalg {

namespace {
const Rational kZero = 0;
}

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), rows_data_(rows)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n)
{
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

SparseMatrix SparseMatrix::zero(int rows, int cols)
{
    return SparseMatrix(rows, cols);
}

SparseMatrix SparseMatrix::dense(std::initializer_list<std::initializer_list<long>> entries)
{
    int r = static_cast<int>(entries.size());
    int c = r == 0 ? 0 : static_cast<int>(entries.begin()->size());
    SparseMatrix m(r, c);
    int i = 0;
    for (const auto& row : entries) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("ragged dense initializer");
        int j = 0;
        for (long v : row) {
            if (v != 0)
                m.set(i, j, rat(v));
            ++j;
        }
        ++i;
    }
    return m;
}

void SparseMatrix::check(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
}

const Rational& SparseMatrix::at(int r, int c) const
{
    check(r, c);
    auto it = rows_data_[r].find(c);
    return it == rows_data_[r].end() ? kZero : it->second;
}

void SparseMatrix::set(int r, int c, const Rational& v)
{
    check(r, c);
    if (v == 0)
        rows_data_[r].erase(c);
    else
        rows_data_[r][c] = v;
}

void SparseMatrix::add_to(int r, int c, const Rational& v)
{
    check(r, c);
    auto it = rows_data_[r].find(c);
    if (it == rows_data_[r].end()) {
        if (v != 0)
            rows_data_[r].emplace(c, v);
        return;
    }
    it->second += v;
    if (it->second == 0)
        rows_data_[r].erase(it);
}

bool SparseMatrix::is_zero() const
{
    for (const auto& row : rows_data_)
        if (!row.empty())
            return false;
    return true;
}

int SparseMatrix::nnz() const
{
    int n = 0;
    for (const auto& row : rows_data_)
        n += static_cast<int>(row.size());
    return n;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rows_data_[r])
            t.rows_data_[c].emplace(r, v);
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    SparseMatrix p(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r) {
        std::map<int, Rational> acc;
        for (const auto& [k, v] : rows_data_[r])
            for (const auto& [c, w] : other.rows_data_[k])
                acc[c] += v * w;
        for (auto& [c, v] : acc)
            if (v != 0)
                p.rows_data_[r].emplace(c, std::move(v));
    }
    return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    SparseMatrix s = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.rows_data_[r])
            s.add_to(r, c, v);
    return s;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    SparseMatrix s = *this;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : other.rows_data_[r])
            s.add_to(r, c, -v);
    return s;
}

SparseMatrix SparseMatrix::operator*(const Rational& s) const
{
    SparseMatrix m(rows_, cols_);
    if (s == 0)
        return m;
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rows_data_[r])
            m.rows_data_[r].emplace(c, v * s);
    return m;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && rows_data_ == other.rows_data_;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& v) const
{
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("apply: vector length mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, w] : rows_data_[r])
            out[r] += w * v[c];
    return out;
}

SparseMatrix SparseMatrix::columns(int c0, int n) const
{
    if (c0 < 0 || n < 0 || c0 + n > cols_)
        throw std::out_of_range("column slice out of range");
    SparseMatrix m(rows_, n);
    for (int r = 0; r < rows_; ++r) {
        auto lo = rows_data_[r].lower_bound(c0);
        auto hi = rows_data_[r].lower_bound(c0 + n);
        for (auto it = lo; it != hi; ++it)
            m.rows_data_[r].emplace(it->first - c0, it->second);
    }
    return m;
}

std::vector<Rational> SparseMatrix::column_vector(int c) const
{
    std::vector<Rational> v(rows_, Rational(0));
    for (int r = 0; r < rows_; ++r) {
        auto it = rows_data_[r].find(c);
        if (it != rows_data_[r].end())
            v[r] = it->second;
    }
    return v;
}

void SparseMatrix::set_column(int c, const std::vector<Rational>& v)
{
    if (static_cast<int>(v.size()) != rows_)
        throw std::invalid_argument("set_column: length mismatch");
    for (int r = 0; r < rows_; ++r)
        set(r, c, v[r]);
}

SparseMatrix SparseMatrix::hcat(const SparseMatrix& other) const
{
    if (rows_ != other.rows_)
        throw std::invalid_argument("hcat: row mismatch");
    SparseMatrix m(rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        m.rows_data_[r] = rows_data_[r];
        for (const auto& [c, v] : other.rows_data_[r])
            m.rows_data_[r].emplace(c + cols_, v);
    }
    return m;
}

SparseMatrix SparseMatrix::vcat(const SparseMatrix& other) const
{
    if (cols_ != other.cols_)
        throw std::invalid_argument("vcat: column mismatch");
    SparseMatrix m(rows_ + other.rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        m.rows_data_[r] = rows_data_[r];
    for (int r = 0; r < other.rows_; ++r)
        m.rows_data_[rows_ + r] = other.rows_data_[r];
    return m;
}

SparseMatrix SparseMatrix::from_column(const std::vector<Rational>& v)
{
    SparseMatrix m(static_cast<int>(v.size()), 1);
    for (int r = 0; r < m.rows(); ++r)
        if (v[r] != 0)
            m.set(r, 0, v[r]);
    return m;
}

} // namespace qalg
