#pragma once

#include <qalg/bar.hpp>

namespace qalg {

// Flat coordinates for the total space of a module: components concatenated
// in degree order.
long flat_dim(const GradedModule& m);
long flat_offset(const GradedModule& m, int d);

// A candidate A-infinity module structure: operations
// mu_n : A_+^{(x) n} (x) V -> V of projective degree 0, n = 1..arity.
// The algebra sits in cohomological degree 0 and is strictly associative;
// V carries no differential of its own (it is folded into mu via the
// degree-0 encoding when needed). The underlying `space` contributes only
// its graded components; its action tables are ignored.
struct AInfinityModule {
    AlgebraPtr algebra;
    ModulePtr space;
    std::vector<SparseMatrix> mu; // mu[n-1]: flat_dim(space) x tuple_space(space, n).dim

    int arity() const { return static_cast<int>(mu.size()); }
    // Shape and projective-degree-0 checks; throws ValidationError /
    // InconsistentGrading.
    void validate_shapes() const;
};

// The genuine-module case: mu_1 = the action, higher operations zero.
AInfinityModule ainf_from_module(ModulePtr m, int arity = 1);

// merge_i : T_n -> T_{n-1}, multiplying slots i and i+1 (1-based), no sign.
SparseMatrix merge_operator(const GradedModule& v, int n, int i);
// contract_q : T_n -> T_{n-q}, applying mu_q to the last q slots and v,
// no sign. For q = n the target is T_0 = V (flat coordinates).
SparseMatrix contract_operator(const AInfinityModule& s, int n, int q);

// The arity-n associativity residual, a map T_n -> V (flat): zero for every
// n iff the structure is an A-infinity module (equivalently, the bar
// differential below squares to zero).
SparseMatrix ainf_residual(const AInfinityModule& s, int n);

struct AInfCheckReport {
    bool ok = true;
    int first_failing_arity = -1;
    SparseMatrix residual; // at the failing arity; flat V rows, T_n columns
    std::string witness;
};

// Checks residuals for n = 2..max_arity (default 2 * arity, enough to see
// every quadratic term once all higher operations vanish).
AInfCheckReport check_ainf_module(const AInfinityModule& s, int max_arity = -1);

// The bar-construction differential on (+)_{n=0..n_max} T_n (T_0 = V,
// flat), with blocks T_n -> T_{n-1} given by signed merges and
// T_n -> T_{n-q} by signed contractions. Squares to zero iff the structure
// passes check_ainf_module; the acceptance suite checks the two agree.
SparseMatrix bar_construction_differential(const AInfinityModule& s, int n_max);

// Offsets of the T_n summands inside that total space.
std::vector<long> bar_construction_offsets(const AInfinityModule& s, int n_max);

// A candidate morphism f : V -> W of A-infinity modules over the same
// algebra: components f_n : A_+^{(x) n} (x) V -> W of projective degree 0,
// n = 0..arity (f[0] is the underlying map V -> W).
struct AInfinityMorphism {
    std::vector<SparseMatrix> f; // f[n]: flat_dim(W) x tuple_space(V, n).dim
};

// Checks D_W o F = F o D_V on arities 0..max_arity, where F is the
// coalgebra map induced by f.
AInfCheckReport check_ainf_morphism(const AInfinityModule& v, const AInfinityModule& w,
                                    const AInfinityMorphism& f, int max_arity = -1);

} // namespace qalg
