#include <qalg/charts.hpp>

#include <qalg/errors.hpp>

#include <algorithm>

namespace qalg {

void QuotProblem::validate() const
{
    if (!ambient)
        throw ValidationError("quot problem needs an ambient module");
    const GradedModule& m = *ambient;
    if (static_cast<int>(h.size()) != m.window_high() - m.window_low() + 1)
        throw ValidationError("dimension vector must cover the window");
    for (int d = m.window_low(); d <= m.window_high(); ++d)
        if (h[d - m.window_low()] < 0 || h[d - m.window_low()] > m.dim(d))
            throw ValidationError("dimension vector out of range at degree " +
                                  std::to_string(d));
}

int QuotProblem::dim_at(int d) const
{
    return h.at(d - ambient->window_low());
}

void ChartSpec::validate(const QuotProblem& qp) const
{
    qp.validate();
    const GradedModule& m = *qp.ambient;
    if (pivots.size() != qp.h.size())
        throw ValidationError("chart must give pivots for every degree");
    for (int d = m.window_low(); d <= m.window_high(); ++d) {
        const std::vector<int>& pv = pivots[d - m.window_low()];
        if (static_cast<int>(pv.size()) != qp.dim_at(d))
            throw ValidationError("pivot count must match the dimension vector at degree " +
                                  std::to_string(d));
        for (size_t i = 0; i < pv.size(); ++i) {
            if (pv[i] < 0 || pv[i] >= m.dim(d))
                throw ValidationError("pivot row out of range");
            if (i > 0 && pv[i] <= pv[i - 1])
                throw ValidationError("pivot rows must be strictly increasing");
        }
    }
}

namespace {

// Bookkeeping for the chart coordinates X_d_pr_fr: per degree, the pivot
// rows, the free rows, and the variable index table.
struct ChartVars {
    int p = 0;
    std::vector<std::vector<int>> free_rows;          // per degree
    std::vector<std::vector<std::vector<int>>> index; // [d-p][pivot r][free c]
    std::vector<std::string> names;
    int count = 0;

    int var(int d, int r, int c) const { return index[d - p][r][c]; }
};

ChartVars chart_vars(const QuotProblem& qp, const ChartSpec& chart)
{
    const GradedModule& m = *qp.ambient;
    ChartVars cv;
    cv.p = m.window_low();
    for (int d = m.window_low(); d <= m.window_high(); ++d) {
        const std::vector<int>& pv = chart.pivots[d - cv.p];
        std::vector<int> free;
        for (int row = 0; row < m.dim(d); ++row)
            if (!std::binary_search(pv.begin(), pv.end(), row))
                free.push_back(row);
        std::vector<std::vector<int>> table(pv.size(), std::vector<int>(free.size(), -1));
        for (size_t r = 0; r < pv.size(); ++r)
            for (size_t c = 0; c < free.size(); ++c) {
                table[r][c] = cv.count++;
                cv.names.push_back("X_" + std::to_string(d) + "_" + std::to_string(pv[r]) +
                                   "_" + std::to_string(free[c]));
            }
        cv.free_rows.push_back(std::move(free));
        cv.index.push_back(std::move(table));
    }
    return cv;
}

Poly var_poly(const ChartVars& cv, int v)
{
    Exponents e(cv.count, 0);
    e[v] = 1;
    return Poly{{e, Rational(1)}};
}

Poly const_poly(const ChartVars& cv, const Rational& c)
{
    if (c == 0)
        return {};
    return Poly{{Exponents(cv.count, 0), c}};
}

} // namespace

SubmodulePoint chart_origin(const QuotProblem& qp, const ChartSpec& chart)
{
    chart.validate(qp);
    const GradedModule& m = *qp.ambient;
    SubmodulePoint out;
    out.ambient = qp.ambient;
    for (int d = m.window_low(); d <= m.window_high(); ++d) {
        const std::vector<int>& pv = chart.pivots[d - m.window_low()];
        SparseMatrix b(m.dim(d), static_cast<int>(pv.size()));
        for (size_t r = 0; r < pv.size(); ++r)
            b.set(pv[r], static_cast<int>(r), Rational(1));
        out.bases.push_back(std::move(b));
    }
    return out;
}

SubmodulePoint chart_point(const QuotProblem& qp, const ChartSpec& chart,
                           const std::vector<Rational>& values)
{
    chart.validate(qp);
    ChartVars cv = chart_vars(qp, chart);
    if (static_cast<int>(values.size()) != cv.count)
        throw ValidationError("chart point needs one value per chart variable");
    const GradedModule& m = *qp.ambient;
    SubmodulePoint out;
    out.ambient = qp.ambient;
    for (int d = m.window_low(); d <= m.window_high(); ++d) {
        const std::vector<int>& pv = chart.pivots[d - m.window_low()];
        const std::vector<int>& free = cv.free_rows[d - m.window_low()];
        SparseMatrix b(m.dim(d), static_cast<int>(pv.size()));
        for (size_t r = 0; r < pv.size(); ++r) {
            b.set(pv[r], static_cast<int>(r), Rational(1));
            for (size_t c = 0; c < free.size(); ++c) {
                const Rational& v = values[cv.var(d, static_cast<int>(r),
                                                  static_cast<int>(c))];
                if (v != 0)
                    b.set(free[c], static_cast<int>(r), v);
            }
        }
        out.bases.push_back(std::move(b));
    }
    return out;
}

PolynomialSystem chart_equations(const QuotProblem& qp, const ChartSpec& chart)
{
    chart.validate(qp);
    const GradedModule& m = *qp.ambient;
    int p = m.window_low(), q = m.window_high();
    ChartVars cv = chart_vars(qp, chart);
    std::vector<GradedElement> gens = effective_generators(*m.algebra());

    PolynomialSystem sys;
    sys.variables = cv.names;

    for (const GradedElement& g : gens) {
        int e = g.degree;
        for (int j = p; j + e <= q; ++j) {
            const std::vector<int>& pv_j = chart.pivots[j - p];
            const std::vector<int>& free_j = cv.free_rows[j - p];
            const std::vector<int>& pv_out = chart.pivots[j + e - p];
            const std::vector<int>& free_out = cv.free_rows[j + e - p];

            for (size_t r = 0; r < pv_j.size(); ++r) {
                // u = g . (e_{pivot r} + sum_c X_{j,r,c} e_{free c}),
                // entries affine in the degree-j variables
                std::vector<Poly> u(m.dim(j + e));
                {
                    std::vector<Rational> base(m.dim(j), Rational(0));
                    base[pv_j[r]] = 1;
                    std::vector<Rational> im = m.act(e, j, g.coords, base);
                    for (int row = 0; row < m.dim(j + e); ++row)
                        u[row] = const_poly(cv, im[row]);
                }
                for (size_t c = 0; c < free_j.size(); ++c) {
                    std::vector<Rational> base(m.dim(j), Rational(0));
                    base[free_j[c]] = 1;
                    std::vector<Rational> im = m.act(e, j, g.coords, base);
                    Poly x = var_poly(cv, cv.var(j, static_cast<int>(r),
                                                 static_cast<int>(c)));
                    for (int row = 0; row < m.dim(j + e); ++row)
                        if (im[row] != 0)
                            u[row] = poly_add(u[row], poly_scale(x, im[row]));
                }

                // u in V_{j+e} iff, at every free row, u equals the graph
                // of its pivot coordinates
                for (size_t c2 = 0; c2 < free_out.size(); ++c2) {
                    Poly eq = u[free_out[c2]];
                    for (size_t r2 = 0; r2 < pv_out.size(); ++r2) {
                        Poly x = var_poly(cv, cv.var(j + e, static_cast<int>(r2),
                                                     static_cast<int>(c2)));
                        eq = poly_add(eq, poly_scale(poly_mul(x, u[pv_out[r2]]),
                                                     Rational(-1)));
                    }
                    if (!eq.empty())
                        sys.equations.push_back(std::move(eq));
                }
            }
        }
    }
    return sys;
}

std::vector<Rational> evaluate_system(const PolynomialSystem& sys,
                                      const std::vector<Rational>& values)
{
    std::vector<Rational> out;
    for (const Poly& eq : sys.equations) {
        Rational v(0);
        for (const auto& [expo, coeff] : eq) {
            Rational term = coeff;
            for (size_t i = 0; i < expo.size(); ++i)
                for (int k = 0; k < expo[i]; ++k)
                    term *= values.at(i);
            v += term;
        }
        out.push_back(v);
    }
    return out;
}

JacobianReport jacobian_tangent_check(const QuotProblem& qp, const ChartSpec& chart)
{
    PolynomialSystem sys = chart_equations(qp, chart);
    int nvars = static_cast<int>(sys.variables.size());

    // the system must vanish at the origin (V must be a submodule there)
    SubmodulePoint origin = chart_origin(qp, chart);
    SubmoduleWitness w = is_submodule(origin);
    if (!w.ok)
        throw NotASubmodule(w.message);

    SparseMatrix jac(static_cast<int>(sys.equations.size()), nvars);
    for (size_t r = 0; r < sys.equations.size(); ++r)
        for (const auto& [expo, coeff] : sys.equations[r]) {
            int total = 0, var = -1;
            for (size_t i = 0; i < expo.size(); ++i) {
                total += expo[i];
                if (expo[i] > 0)
                    var = static_cast<int>(i);
            }
            if (total == 1)
                jac.set(static_cast<int>(r), var, coeff);
        }

    JacobianReport rep;
    rep.jacobian_kernel_dim = nvars - rank(jac);
    rep.classical_dim = tangent_classical(origin).dimension;
    rep.pass = rep.jacobian_kernel_dim == rep.classical_dim;
    return rep;
}

} // namespace qalg
