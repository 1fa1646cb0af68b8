#pragma once

#include <qalg/graded_module.hpp>
#include <qalg/polynomial.hpp>
#include <qalg/solve.hpp>

namespace qalg {

// A = K[x0..x_{n-1}] / I truncated in degrees 0..max_degree; generators of
// I must be homogeneous for the declared weights.
struct IdealPresentation {
    int num_vars = 0;
    std::vector<int> var_degrees; // empty means all 1
    std::vector<Poly> generators;
    int max_degree = 0;
};

// The truncated coordinate ring, carrying normal-form data per degree so
// later stages can reduce polynomials to coordinates in the chosen basis.
// Basis of A_d: the non-leading monomials of degree d (grlex-descending
// monomial order, leading = pivot of the per-degree row echelon of I_d).
class CoordinateRing {
public:
    explicit CoordinateRing(IdealPresentation ip);

    const AlgebraPtr& algebra() const { return algebra_; }
    int num_vars() const { return ip_.num_vars; }
    int max_degree() const { return ip_.max_degree; }
    const std::vector<int>& weights() const { return weights_; }

    // All monomials of S = K[x] in degree d, the ambient coordinates.
    const std::vector<Exponents>& monomials(int d) const;
    // The monomials representing the basis of A_d.
    const std::vector<Exponents>& basis_monomials(int d) const;

    // Coordinates of the normal form of a homogeneous polynomial of
    // degree d (checked) in the basis of A_d. Throws InconsistentGrading.
    std::vector<Rational> reduce(const Poly& f) const;
    std::vector<Rational> reduce_at(const Poly& f, int d) const;

    GradedModule ring_module(int p, int q) const; // A itself on [p, q]

private:
    std::vector<Rational> reduce_raw(const Poly& f, int d) const;

    IdealPresentation ip_;
    std::vector<int> weights_;
    AlgebraPtr algebra_;
    std::vector<std::vector<Exponents>> monomials_;       // per degree
    std::vector<std::map<Exponents, int>> monomial_index_; // per degree
    std::vector<std::vector<Exponents>> basis_;           // per degree
    std::vector<QuotientSpace> reducers_;                 // S_d -> A_d coords
};

// M = (free module on generators of the given degrees) / relations, over
// R.algebra(), on the window [p, q]. relations[r][k] is the coefficient of
// generator k (a homogeneous polynomial, or zero); each relation must be
// homogeneous overall.
struct ModulePresentation {
    std::vector<int> gen_degrees;
    std::vector<std::vector<Poly>> relations;
    int p = 0;
    int q = 0;
};

GradedModule module_from_presentation(const CoordinateRing& r, const ModulePresentation& mp);

// The free module on generators of the given degrees (no relations).
GradedModule free_module(AlgebraPtr algebra, const std::vector<int>& gen_degrees, int p, int q);

// The subspace of A_{[p,q]} spanned by all multiples of the given
// homogeneous ideal generators, as a point in ring_module(p, q).
SubmodulePoint ideal_submodule(const CoordinateRing& r, const std::vector<Poly>& gens, int p,
                               int q);
SubmodulePoint ideal_submodule(const CoordinateRing& r, const std::vector<std::string>& gens,
                               int p, int q);

} // namespace qalg
