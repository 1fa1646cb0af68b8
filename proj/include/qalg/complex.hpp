#pragma once

#include <qalg/elimination.hpp>

#include <map>
#include <string>

namespace qalg {

// A finite cochain complex: components C^lo .. C^hi with differentials
// d^i : C^i -> C^{i+1}. d o d = 0 is verified exactly on construction.
class CochainComplex {
public:
    CochainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix> differentials);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    int dim(int i) const;

    // d^i, or an appropriately shaped zero matrix outside the range.
    SparseMatrix differential(int i) const;

    int cohomology(int i) const;
    std::map<int, int> cohomology_all() const;
    long euler_characteristic() const;

private:
    int lo_;
    std::vector<int> dims_;
    std::vector<SparseMatrix> d_; // d_[k]: C^{lo+k} -> C^{lo+k+1}

    void verify() const; // throws SignError on d^2 != 0, shape errors otherwise
};

} // namespace qalg
