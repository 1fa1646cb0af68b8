#pragma once

#include <qalg/graded_module.hpp>
#include <qalg/solve.hpp>

#include <map>
#include <string>
#include <vector>

namespace qalg {

struct SubmoduleWitness {
    bool ok = true;
    int generator_degree = 0; // algebra generator degree e
    int generator_index = 0;  // index within A_e
    int degree = 0;           // module degree j with A_e . V_j not inside V_{j+e}
    std::vector<Rational> vector; // an offending image, coordinates in M_{j+e}
    std::string message;
};

// The declared algebra generators, or every positive-degree basis vector
// when no generator list was declared.
std::vector<GradedElement> effective_generators(const GradedAlgebra& a);

// A_e . V_j inside V_{j+e} for every declared algebra generator degree e
// and window degree j (images past the window are ignored).
SubmoduleWitness is_submodule(const SubmodulePoint& v);

// The residual matrices of the canonical sections: for algebra generator g
// of degree e and window degree j, the matrix of V_j -> M_{j+e} -> M/V;
// all zero iff is_submodule.
struct SectionValue {
    int generator_degree = 0;
    int generator_index = 0;
    int degree = 0;         // source degree j
    SparseMatrix residual;  // dim (M/V)_{j+e} x dim V_j
};

std::vector<SectionValue> section_values(const SubmodulePoint& v);

// dim Hom^0_A(V, M/V) by direct linear solve on the window, with a basis of
// solutions (stacked per-degree blocks in flat coordinates).
struct ClassicalTangent {
    int dimension = 0;
    SparseMatrix basis; // columns = solutions; rows = per-degree Hom coordinates
};

ClassicalTangent tangent_classical(const SubmodulePoint& v); // throws NotASubmodule

// The A-generated graded subspace with bottom W_p: component at p + j is
// the span of A_j . W_p (j = 0 gives W_p itself).
SubmodulePoint generate_from_bottom(ModulePtr m, int p, const SparseMatrix& w_p);

} // namespace qalg
