#pragma once

#include <qalg/graded_algebra.hpp>

#include <map>
#include <string>
#include <vector>

namespace qalg {

// Free graded-commutative dg-algebra on named bigraded generators. Signs
// see only the cohomological degree; generators of odd cohomological degree
// square to zero, even ones are polynomial.
struct DgaGenerator {
    std::string name;
    BiDegree degree;
};

// Sorted (generator index, exponent > 0) pairs; the empty monomial is 1.
using DgaMonomial = std::vector<std::pair<int, int>>;
using DgaPoly = std::map<DgaMonomial, Rational>;

class FreeDgaPresentation {
public:
    FreeDgaPresentation() = default;

    int add_generator(const std::string& name, BiDegree degree); // returns index
    void set_differential(int gen, DgaPoly d); // degree-checked (+1 cohomological)

    int num_generators() const { return static_cast<int>(gens_.size()); }
    const DgaGenerator& generator(int i) const { return gens_.at(i); }
    const DgaPoly& differential_of(int i) const { return diffs_.at(i); }
    int generator_index(const std::string& name) const; // -1 if absent

    BiDegree degree(const DgaMonomial& m) const;
    bool homogeneous(const DgaPoly& f, BiDegree* degree) const;

    DgaPoly mul(const DgaPoly& f, const DgaPoly& g) const;
    static DgaPoly add(const DgaPoly& f, const DgaPoly& g);
    static DgaPoly scale(const DgaPoly& f, const Rational& c);
    static DgaPoly one();
    static DgaPoly gen_poly(int gen);

    // d extended to polynomials as a cohomological-degree +1 derivation.
    DgaPoly d(const DgaPoly& f) const;

    // d(d(g)) = 0 for every generator; throws SignError with the witness.
    void verify_d2() const;

    // All monomials of the given bidegree with total exponent <= cap, in a
    // deterministic (lexicographic in generator indices) order.
    std::vector<DgaMonomial> monomial_basis(BiDegree degree, int cap) const;

    std::string to_string(const DgaPoly& f) const;

    // Scalar evaluation at a point (one value per generator); meaningful
    // for polynomials in even-degree generators.
    static Rational evaluate(const DgaPoly& f, const std::vector<Rational>& values);

private:
    std::vector<DgaGenerator> gens_;
    std::vector<DgaPoly> diffs_;

    // Product of two monomials with the Koszul sign; zero if an odd
    // generator repeats.
    bool mul_monomials(const DgaMonomial& a, const DgaMonomial& b, DgaMonomial* out,
                       int* sign) const;
};

} // namespace qalg
