#pragma once

#include <qalg/sparse_matrix.hpp>

#include <memory>
#include <string>
#include <vector>

namespace qalg {

// Lower grading is "projective", upper grading "cohomological"; only the
// cohomological component enters sign rules.
struct BiDegree {
    int projective = 0;
    int cohomological = 0;

    bool operator==(const BiDegree&) const = default;
};

struct Component {
    int dim = 0;
    std::vector<std::string> basis_names;
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// An element of a single graded component, as coordinates in its basis.
struct GradedElement {
    int degree = 0;
    std::vector<Rational> coords;
};

// A graded algebra A = A_0 + ... + A_d given by finite multiplication
// tables. Everything sits in cohomological degree 0. The tensor index
// convention throughout is (a, b) -> a * dim_right + b.
class GradedAlgebra {
public:
    GradedAlgebra(int max_degree, std::vector<Component> components, bool unital,
                  bool commutative);

    int max_degree() const { return max_degree_; }
    int dim(int i) const;
    const Component& component(int i) const { return components_[i]; }
    bool unital() const { return unital_; }
    bool commutative() const { return commutative_; }

    // A_i (x) A_j -> A_{i+j}, defined for i + j <= max_degree.
    const SparseMatrix& mult(int i, int j) const;
    void set_mult(int i, int j, SparseMatrix table);

    std::vector<Rational> multiply(int i, int j, const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;

    const std::vector<GradedElement>& generators() const { return generators_; }
    void set_generators(std::vector<GradedElement> gens) { generators_ = std::move(gens); }

    // Checks unit behaviour, associativity and (if flagged) commutativity
    // everywhere the truncation allows. Also warns when the declared
    // generator list does not generate the positive part.
    ValidationReport validate() const;

    std::string basis_name(int degree, int index) const;

private:
    int max_degree_;
    std::vector<Component> components_;
    bool unital_;
    bool commutative_;
    // mult_[i][j] for i + j <= max_degree.
    std::vector<std::vector<SparseMatrix>> mult_;
    std::vector<GradedElement> generators_;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

} // namespace qalg
