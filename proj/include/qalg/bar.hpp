#pragma once

#include <qalg/complex.hpp>
#include <qalg/graded_module.hpp>

#include <optional>

namespace qalg {

// Degrees of the positive part A_+: [1, max] for unital algebras, [0, max]
// otherwise (the degree-0 encoding of ungraded inputs).
std::vector<int> positive_degrees(const GradedAlgebra& a);

// Basis bookkeeping for A_+^{(x) n} (x) V. Blocks are indexed by the
// composition (i_1..i_n) of positive algebra degrees together with the V
// degree j; within a block, tuples are mixed-radix with a_1 most
// significant and the V index least significant.
struct TupleBlock {
    std::vector<int> comp;
    int j = 0;
    int tot = 0;            // sum(comp) + j
    std::vector<int> radix; // per-slot dims: dim A_{i_1}, .., dim A_{i_n}, dim V_j
    long dim = 0;
    long offset = 0;
};

struct TupleSpace {
    int arity = 0;
    std::vector<TupleBlock> blocks;
    long dim = 0;
    std::map<std::pair<std::vector<int>, int>, int> index; // (comp, j) -> block

    int find_block(const std::vector<int>& comp, int j) const; // -1 if absent
    // Per-slot indices of a flat position inside a block, and back.
    std::vector<int> decode(int block, long flat_in_block) const;
    long encode(int block, const std::vector<int>& idx) const;
};

TupleSpace tuple_space(const GradedModule& v, int arity);

// Hom^0(A_+^{(x) n} (x) V, N): block (comp, j) contributes
// dim(block) * dim N_{tot} coordinates, flat index = block offset +
// source * dim N_{tot} + target.
struct HomSpace {
    TupleSpace source;
    std::vector<int> target_dim; // per block: dim N_{tot}
    std::vector<long> offset;    // per block
    long dim = 0;
};

HomSpace hom_space(const TupleSpace& t, const GradedModule& n);

// The reduced bar cochain complex computing Ext_A(V, N) in internal degree
// zero: C^n = Hom^0(A_+^{(x) n} (x) V, N) with the Hochschild-style
// differential. Both V and N must be genuine modules over the same algebra.
class BarBuilder {
public:
    BarBuilder(ModulePtr v, ModulePtr n);

    const GradedModule& v() const { return *v_; }
    const GradedModule& n() const { return *n_; }

    HomSpace term(int arity) const;
    long term_dim(int arity) const;
    // d : C^arity -> C^{arity+1}
    SparseMatrix differential(int arity) const;

    // Largest arity with a nonzero term, or nullopt when the positive part
    // has a degree-0 piece (the ungraded case, where a cap is required).
    std::optional<int> arity_bound() const;

private:
    ModulePtr v_, n_;
};

// The complex C^0..C^{n_max} assembled and d^2-checked. For graded inputs
// n_max may be -1, meaning "up to the automatic arity bound".
CochainComplex bar_hom_complex(ModulePtr v, ModulePtr n, int n_max);

// dim Ext^i_A(V, N) in internal degree zero, via the bar complex. Only the
// three terms around position i are materialized; d^2 = 0 is checked there.
int ext_bar(ModulePtr v, ModulePtr n, int i);

// A canonical basis of cocycle representatives for Ext^i, as columns in the
// coordinates of C^i (cocycles completing a basis of the coboundaries).
SparseMatrix ext_bar_representatives(ModulePtr v, ModulePtr n, int i);

// Tor via the reduced bar chain complex P (x) A_+^{(x) n} (x) Q, split by
// total (projective) degree. Returns per-degree dimensions within the
// window reachable from the inputs. Only the arities i-1, i, i+1 are
// materialized, so no arity cap is needed.
std::map<int, int> tor_bar(ModulePtr p, ModulePtr q, int i);

} // namespace qalg
