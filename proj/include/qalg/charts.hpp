#pragma once

#include <qalg/polynomial.hpp>
#include <qalg/quot.hpp>

namespace qalg {

// A Quot problem on the window of the ambient module: target Hilbert
// function h(p)..h(q) of the subspace.
struct QuotProblem {
    ModulePtr ambient;
    std::vector<int> h; // index d - p

    void validate() const; // 0 <= h <= dim M_d
    int dim_at(int d) const;
};

// An affine chart of the product of Grassmannians: per degree, the pivot
// rows over which the subspaces are graphs.
struct ChartSpec {
    std::vector<std::vector<int>> pivots; // index d - p; sorted, size h(d)

    void validate(const QuotProblem& qp) const;
};

// The chart origin: V_d = span of the pivot coordinate vectors.
SubmodulePoint chart_origin(const QuotProblem& qp, const ChartSpec& chart);
// The point of the chart with the given coordinate values (variable order
// as in chart_equations).
SubmodulePoint chart_point(const QuotProblem& qp, const ChartSpec& chart,
                           const std::vector<Rational>& values);

// The stability conditions in graph coordinates: affine-quadratic
// polynomials in variables "X_d_r_c" (degree, pivot index r, free row c)
// whose common zero locus inside the chart is exactly the set of
// submodule points.
struct PolynomialSystem {
    std::vector<std::string> variables; // deterministic order
    std::vector<Poly> equations;        // exponents over `variables`
};

PolynomialSystem chart_equations(const QuotProblem& qp, const ChartSpec& chart);

// Evaluate the system at chart coordinates; zero vector iff is_submodule
// at chart_point.
std::vector<Rational> evaluate_system(const PolynomialSystem& sys,
                                      const std::vector<Rational>& values);

// dim ker of the Jacobian of chart_equations at the chart origin, compared
// with tangent_classical at the same point.
struct JacobianReport {
    int jacobian_kernel_dim = 0;
    int classical_dim = 0;
    bool pass = false;
};

JacobianReport jacobian_tangent_check(const QuotProblem& qp, const ChartSpec& chart);

} // namespace qalg
