#pragma once

#include <qalg/graded_module.hpp>

#include <map>

namespace qalg {

// Hom grading for the classical Ext route: DegreeZero restricts to maps of
// projective degree 0 (the graded case); All takes every K-linear map (the
// ungraded case, valid when the modules are exactly represented, not
// truncations).
enum class HomGrading {
    DegreeZero,
    All,
};

// A windowed minimal free resolution F^length -> .. -> F^0 -> V, exact per
// degree within the window. Generators are extracted degree by degree as
// complements of A_+ times lower pieces, so the resolution is minimal and
// canonical.
class FreeResolutionWindow {
public:
    FreeResolutionWindow(ModulePtr v, int length);

    int length() const { return static_cast<int>(layers_.size()) - 1; }
    const GradedModule& v() const { return *v_; }

    // Generator degrees of F^l.
    const std::vector<int>& gen_degrees(int l) const;
    // Generator vectors: coordinates in F^{l-1} (layer 0: in V) at the
    // generator's degree.
    const std::vector<std::vector<Rational>>& gen_vectors(int l) const;

    const GradedModule& layer(int l) const;

    // The boundary F^l_d -> F^{l-1}_d (layer 0 maps to V_d).
    SparseMatrix boundary(int l, int d) const;

private:
    ModulePtr v_;
    struct Layer {
        std::vector<int> gen_degrees;
        std::vector<std::vector<Rational>> gen_vectors;
        std::shared_ptr<GradedModule> free; // free module on the generators
    };
    std::vector<Layer> layers_;
};

// dim Ext^i_A(V, N) via the minimal free resolution; internal degree 0
// under DegreeZero, total Ext under All.
int ext_free(ModulePtr v, ModulePtr n, int i, HomGrading grading = HomGrading::DegreeZero);

// Betti numbers within the window: b[l][d] = generators of F^l in degree d.
std::map<int, std::map<int, int>> betti_numbers(ModulePtr v, int length);

} // namespace qalg
