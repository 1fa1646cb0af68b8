#pragma once

#include <qalg/graded_algebra.hpp>

#include <map>

namespace qalg {

// A graded A-module stored on the inclusive degree window [p, q], with
// action tables A_i (x) M_j -> M_{i+j}. For unital algebras the unit acts
// as the identity, is not stored, and tables start at i = 1; non-unital
// algebras (the encoding of ungraded inputs, concentrated in degree 0)
// carry a table for i = 0 as well.
class GradedModule {
public:
    GradedModule(AlgebraPtr algebra, int p, int q, std::vector<Component> components);

    static GradedModule zero(AlgebraPtr algebra, int p, int q);
    // The algebra as a module over itself on [p, q]; needs q <= max_degree.
    static GradedModule from_algebra(AlgebraPtr algebra, int p, int q);

    const AlgebraPtr& algebra() const { return algebra_; }
    int window_low() const { return p_; }
    int window_high() const { return q_; }
    bool in_window(int d) const { return d >= p_ && d <= q_; }
    int dim(int d) const;
    const Component& component(int d) const;

    // Smallest i with a stored action table: 1 if unital, else 0.
    int min_action_degree() const { return algebra_->unital() ? 1 : 0; }

    // A_i (x) M_j -> M_{i+j}; i >= min_action_degree(), j and i+j in window.
    const SparseMatrix& action(int i, int j) const;
    void set_action(int i, int j, SparseMatrix table);

    std::vector<Rational> act(int i, int j, const std::vector<Rational>& a,
                              const std::vector<Rational>& m) const;
    // Action by a single algebra basis vector.
    std::vector<Rational> act_basis(int i, int a_index, int j,
                                    const std::vector<Rational>& m) const;

    std::map<int, int> hilbert_function() const;
    GradedModule truncate(int p2, int q2) const; // throws WindowViolation
    GradedModule twist(int n) const;             // M(n)_i = M_{i+n}

    ValidationReport validate() const;

    std::string basis_name(int degree, int index) const;

private:
    AlgebraPtr algebra_;
    int p_, q_;
    std::vector<Component> components_;
    // action_[i][j - p] for i >= min_action_degree(), p <= j, i + j <= q.
    std::vector<std::vector<SparseMatrix>> action_;
};

using ModulePtr = std::shared_ptr<const GradedModule>;

// A candidate graded subspace of a module: per-degree full-column-rank
// basis matrices. A-stability is not an invariant; quot-geometry tests it.
struct SubmodulePoint {
    ModulePtr ambient;
    std::vector<SparseMatrix> bases; // index d - p; dim M_d x k_d

    const SparseMatrix& basis(int d) const;
    int sub_dim(int d) const;
    std::vector<int> dims() const;
    void check_shapes() const; // throws ValidationError

    static SubmodulePoint whole(ModulePtr m);
    static SubmodulePoint zero(ModulePtr m);
};

// The submodule as a module in its own right, with the induced action.
// Throws NotASubmodule if some action leaves the subspace.
GradedModule submodule_module(const SubmodulePoint& v);

struct QuotientModule {
    GradedModule module;
    // projection[d - p]: dim Q_d x dim M_d, coordinates in the chosen
    // complement basis; projection o (inclusion of V) = 0.
    std::vector<SparseMatrix> projection;
};

// M/V with induced action; valid whether or not V is a submodule as long as
// the per-degree quotient spaces are used consistently (callers that need a
// genuine module check stability first).
QuotientModule quotient_module(const SubmodulePoint& v);

} // namespace qalg
