#include <qalg/complex.hpp>

#include <qalg/errors.hpp>

namespace qalg {

CochainComplex::CochainComplex(int lo, std::vector<int> dims,
                               std::vector<SparseMatrix> differentials)
    : lo_(lo), dims_(std::move(dims)), d_(std::move(differentials))
{
    if (dims_.empty())
        throw ValidationError("complex needs at least one component");
    if (d_.size() + 1 != dims_.size())
        throw ValidationError("complex needs one differential per adjacent pair");
    verify();
}

void CochainComplex::verify() const
{
    for (size_t k = 0; k < d_.size(); ++k) {
        if (d_[k].cols() != dims_[k] || d_[k].rows() != dims_[k + 1])
            throw ValidationError("differential shape mismatch at position " +
                                  std::to_string(lo_ + static_cast<int>(k)));
        if (k > 0 && !(d_[k] * d_[k - 1]).is_zero())
            throw SignError("d^2 != 0 at position " + std::to_string(lo_ + static_cast<int>(k) - 1));
    }
}

int CochainComplex::dim(int i) const
{
    if (i < lo_ || i > hi())
        return 0;
    return dims_[i - lo_];
}

SparseMatrix CochainComplex::differential(int i) const
{
    if (i < lo_ || i >= hi())
        return SparseMatrix(dim(i + 1), dim(i));
    return d_[i - lo_];
}

int CochainComplex::cohomology(int i) const
{
    if (i < lo_ || i > hi())
        return 0;
    SparseMatrix din = differential(i - 1);
    SparseMatrix dout = differential(i);
    return (dout.cols() - rank(dout)) - rank(din);
}

std::map<int, int> CochainComplex::cohomology_all() const
{
    std::map<int, int> h;
    for (int i = lo_; i <= hi(); ++i)
        h[i] = cohomology(i);
    return h;
}

long CochainComplex::euler_characteristic() const
{
    long chi = 0;
    for (int i = lo_; i <= hi(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * static_cast<long>(dim(i));
    return chi;
}

} // namespace qalg
