#pragma once

#include <qalg/ainfinity.hpp>
#include <qalg/complex.hpp>
#include <qalg/ingestion.hpp>

#include <map>

namespace qalg {

struct TangentReport {
    CochainComplex complex;
    int valid_up_to = 0;           // cohomology is reliable for i <= this
    std::map<int, int> cohomology; // degree -> dimension, within that range
    // Dimensions from an independent route (classical Ext via minimal free
    // resolutions, or the direct cocycle count), where one exists.
    std::map<int, int> oracle;
    bool pass = true; // cohomology == oracle on the degrees both cover
};

// The tangent complex at a genuine module structure inside the action
// space: C^i = Hom^0(A_+^{(x) i+1} (x) V, V) with the shifted bar
// differential. H^0 is the space of degree-zero cocycle deformations of
// the action; H^i = Ext^{i+1}(V, V) for i >= 1. Throws NotAnAction when
// mu_1 fails the associativity check.
TangentReport tangent_ract(const AInfinityModule& s, int arity_cap);

// Tangent cone of the space of A-linear maps at an arbitrary linear map
// f : V -> M (given in flat coordinates): E^{-1} = K with d(1) = the
// linearity defect (a, v) |-> f(a v) - a f(v), E^i = Hom^0(A_+^{(x) i+1}
// (x) V, M) with the bar differential. H^{-1} = K iff f is A-linear.
TangentReport rlin_cone(ModulePtr v, ModulePtr m, const SparseMatrix& f, int arity_cap);

// Tangent cone of the derived Grassmannian / Quot at a submodule point:
// C^{-1} = Hom^0(V, V), C^i = Hom^0(T_{i+1}(V), V) (+) Hom^0(T_i(V), M)
// with d x0 = (-delta x0, incl o x0) and d (x, y) = (-delta x,
// incl o x + delta y). H^i = Ext^i_A(V, M/V) for i >= 0.
TangentReport tangent_rg_cone(const SubmodulePoint& point, int arity_cap);

// tangent_rg_cone computed on the windows [p, q], [p, q+1], [p, q+2] of
// the ambient module; throws WindowUnstable when the cohomology in degrees
// <= i_max changes under widening. The submodule is regenerated on each
// window from its polynomial generators over the coordinate ring.
struct DerivedQuotTangent {
    std::map<int, int> cohomology; // the stable dimensions, degrees 0..i_max
    std::vector<TangentReport> reports; // one per window
};

DerivedQuotTangent derived_quot_tangent(const CoordinateRing& ring,
                                        const std::vector<Poly>& submodule_gens,
                                        int p, int q, int i_max);

} // namespace qalg
