#pragma once

#include <qalg/ainfinity.hpp>
#include <qalg/dga.hpp>

namespace qalg {

// The coordinate dg-algebra of the action space: one generator of
// cohomological degree 1 - n (projective 0) per matrix coordinate of a
// candidate operation mu_n, n = 1..arity_max; the differential of a mu_N
// coordinate is the corresponding coordinate of the arity-N associativity
// residual (linear merge terms in mu_{N-1} plus quadratic mu_p mu_q terms,
// p + q = N). d^2 = 0 is verified on construction.
struct RactDga {
    ModulePtr space;
    int arity_max = 0;
    FreeDgaPresentation dga;
    // hom-coordinate flat index (HomSpace of tuple_space(space, n) into
    // space) -> dga generator index, per arity n = 1..arity_max.
    std::vector<std::vector<int>> gen_of;

    int generator(int n, long hom_flat) const { return gen_of.at(n - 1).at(hom_flat); }
};

RactDga build_ract_dga(ModulePtr space, int arity_max);

// Generators of the ideal cutting pi_0: the differentials of the
// cohomological degree -1 generators with every generator of negative
// degree set to zero. Polynomials in the degree-0 generators (the mu_1
// coordinates) only.
std::vector<DgaPoly> pi0_ideal(const RactDga& r);

} // namespace qalg
