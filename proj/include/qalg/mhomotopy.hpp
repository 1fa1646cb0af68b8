#pragma once

#include <qalg/dga.hpp>

namespace qalg {

// A dg-algebra map B -> C, recorded by generator images.
struct DgaMorphism {
    std::vector<DgaPoly> images; // per generator of B
};

// Checks degrees and d o f = f o d on every generator.
void validate_dga_morphism(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                           const DgaMorphism& f);

// A polynomial in t with dg-algebra coefficients.
using TPoly = std::vector<DgaPoly>; // index = power of t

// A homotopy between two dg maps f0, f1 : B -> C: a t-family of algebra
// maps f_t with f_0 = f0, f_1 = f1, and an f_t-derivation s_t of
// cohomological degree -1, satisfying f_t' = d o s_t + s_t o d as an exact
// identity of polynomials in t.
struct MHomotopy {
    std::vector<TPoly> f; // per generator of B
    std::vector<TPoly> s; // per generator of B, degree shifted by -1
};

// Constructs the homotopy by downward induction on generator degree
// (B must be generated in cohomological degrees <= 0): in each step the
// required correction is a d-preimage, solved exactly over the monomial
// basis of C up to the exponent cap. Throws NotHomotopic when f0 and f1
// disagree in H^0 (the degree-0 step has no preimage), AcyclicityFailure
// when a lower-degree preimage is missing within the cap.
MHomotopy m_homotopy_construct(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                               const DgaMorphism& f0, const DgaMorphism& f1,
                               int exponent_cap);

// Exact verification of f_t' = d o s_t + s_t o d, the endpoint equalities,
// and d o f_t = f_t o d, coefficientwise in t. Throws SignError on failure.
void verify_m_homotopy(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                       const DgaMorphism& f0, const DgaMorphism& f1, const MHomotopy& h);

// f_t at a rational value of t, as a plain morphism.
DgaMorphism evaluate_homotopy(const MHomotopy& h, const Rational& t);

} // namespace qalg
