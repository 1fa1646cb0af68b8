#include <qalg/graded_algebra.hpp>

#include <qalg/errors.hpp>
#include <qalg/solve.hpp>

namespace qalg {

GradedAlgebra::GradedAlgebra(int max_degree, std::vector<Component> components, bool unital,
                             bool commutative)
    : max_degree_(max_degree), components_(std::move(components)), unital_(unital),
      commutative_(commutative)
{
    if (max_degree_ < 0)
        throw ValidationError("algebra truncation bound must be >= 0");
    if (static_cast<int>(components_.size()) != max_degree_ + 1)
        throw ValidationError("algebra needs one component per degree 0..max_degree");
    mult_.resize(max_degree_ + 1);
    for (int i = 0; i <= max_degree_; ++i) {
        mult_[i].resize(max_degree_ - i + 1);
        for (int j = 0; i + j <= max_degree_; ++j)
            mult_[i][j] = SparseMatrix(dim(i + j), dim(i) * dim(j));
    }
}

int GradedAlgebra::dim(int i) const
{
    if (i < 0 || i > max_degree_)
        return 0;
    return components_[i].dim;
}

const SparseMatrix& GradedAlgebra::mult(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > max_degree_)
        throw WindowViolation("multiplication table outside truncation");
    return mult_[i][j];
}

void GradedAlgebra::set_mult(int i, int j, SparseMatrix table)
{
    if (i < 0 || j < 0 || i + j > max_degree_)
        throw WindowViolation("multiplication table outside truncation");
    if (table.rows() != dim(i + j) || table.cols() != dim(i) * dim(j))
        throw ValidationError("multiplication table shape mismatch");
    mult_[i][j] = std::move(table);
}

std::vector<Rational> GradedAlgebra::multiply(int i, int j, const std::vector<Rational>& a,
                                              const std::vector<Rational>& b) const
{
    const SparseMatrix& t = mult(i, j);
    std::vector<Rational> tensor(static_cast<size_t>(dim(i)) * dim(j), Rational(0));
    for (int x = 0; x < dim(i); ++x) {
        if (a[x] == 0)
            continue;
        for (int y = 0; y < dim(j); ++y)
            if (b[y] != 0)
                tensor[static_cast<size_t>(x) * dim(j) + y] = a[x] * b[y];
    }
    return t.apply(tensor);
}

std::string GradedAlgebra::basis_name(int degree, int index) const
{
    const auto& names = components_[degree].basis_names;
    if (index < static_cast<int>(names.size()))
        return names[index];
    return "a" + std::to_string(degree) + "_" + std::to_string(index);
}

namespace {

std::vector<Rational> unit_vector(int dim, int k)
{
    std::vector<Rational> v(dim, Rational(0));
    v[k] = 1;
    return v;
}

} // namespace

ValidationReport GradedAlgebra::validate() const
{
    ValidationReport report;
    const GradedAlgebra& A = *this;

    if (unital_) {
        if (dim(0) != 1) {
            report.violations.push_back("unital algebra must have dim A_0 = 1, got " +
                                        std::to_string(dim(0)));
            return report;
        }
        std::vector<Rational> one = {Rational(1)};
        for (int j = 0; j <= max_degree_; ++j)
            for (int k = 0; k < dim(j); ++k) {
                auto e = unit_vector(dim(j), k);
                if (A.multiply(0, j, one, e) != e)
                    report.violations.push_back("unit fails to act as identity on left of (" +
                                                std::to_string(j) + ", basis " + basis_name(j, k) +
                                                ")");
                if (A.multiply(j, 0, e, one) != e)
                    report.violations.push_back("unit fails to act as identity on right of (" +
                                                std::to_string(j) + ", basis " + basis_name(j, k) +
                                                ")");
            }
    }

    for (int i = 0; i <= max_degree_; ++i)
        for (int j = 0; i + j <= max_degree_; ++j)
            for (int k = 0; i + j + k <= max_degree_; ++k)
                for (int x = 0; x < dim(i); ++x)
                    for (int y = 0; y < dim(j); ++y)
                        for (int z = 0; z < dim(k); ++z) {
                            auto ex = unit_vector(dim(i), x);
                            auto ey = unit_vector(dim(j), y);
                            auto ez = unit_vector(dim(k), z);
                            auto ab_c = A.multiply(i + j, k, A.multiply(i, j, ex, ey), ez);
                            auto a_bc = A.multiply(i, j + k, ex, A.multiply(j, k, ey, ez));
                            if (ab_c != a_bc)
                                report.violations.push_back(
                                    "associativity fails at degrees (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + "), basis (" +
                                    basis_name(i, x) + "," + basis_name(j, y) + "," +
                                    basis_name(k, z) + ")");
                        }

    if (commutative_) {
        for (int i = 0; i <= max_degree_; ++i)
            for (int j = 0; i + j <= max_degree_; ++j)
                for (int x = 0; x < dim(i); ++x)
                    for (int y = 0; y < dim(j); ++y) {
                        auto ex = unit_vector(dim(i), x);
                        auto ey = unit_vector(dim(j), y);
                        if (A.multiply(i, j, ex, ey) != A.multiply(j, i, ey, ex))
                            report.violations.push_back(
                                "commutativity fails at (" + std::to_string(i) + "," +
                                std::to_string(j) + "), basis (" + basis_name(i, x) + "," +
                                basis_name(j, y) + ")");
                    }
    }

    // Do the declared generators generate A_+ within the truncation?
    if (!generators_.empty()) {
        // span_d grows degree by degree: gen products of everything so far.
        std::vector<SparseMatrix> span;
        span.reserve(max_degree_ + 1);
        for (int d = 0; d <= max_degree_; ++d)
            span.push_back(SparseMatrix(dim(d), 0));
        if (unital_ && dim(0) == 1)
            span[0] = SparseMatrix::identity(1);
        for (int d = 1; d <= max_degree_; ++d) {
            SparseMatrix candidates(dim(d), 0);
            for (const auto& g : generators_) {
                if (g.degree == d)
                    candidates = candidates.hcat(SparseMatrix::from_column(g.coords));
                if (g.degree >= 1 && g.degree < d) {
                    int j = d - g.degree;
                    for (int c = 0; c < span[j].cols(); ++c) {
                        auto prod = multiply(g.degree, j, g.coords, span[j].column_vector(c));
                        candidates = candidates.hcat(SparseMatrix::from_column(prod));
                    }
                }
            }
            span[d] = span_basis(candidates);
            if (span[d].cols() < dim(d))
                report.violations.push_back("declared generators do not span A_" +
                                            std::to_string(d) + " (" +
                                            std::to_string(span[d].cols()) + " of " +
                                            std::to_string(dim(d)) + ")");
        }
    }

    return report;
}

} // namespace qalg
