#include <qalg/graded_module.hpp>

#include <qalg/errors.hpp>
#include <qalg/solve.hpp>

namespace qalg {

GradedModule::GradedModule(AlgebraPtr algebra, int p, int q, std::vector<Component> components)
    : algebra_(std::move(algebra)), p_(p), q_(q), components_(std::move(components))
{
    if (!algebra_)
        throw ValidationError("module needs an algebra");
    int width = q_ >= p_ ? q_ - p_ + 1 : 0;
    if (static_cast<int>(components_.size()) != width)
        throw ValidationError("module needs one component per window degree");
    action_.resize(algebra_->max_degree() + 1);
    for (int i = min_action_degree(); i <= algebra_->max_degree(); ++i) {
        action_[i].resize(width);
        for (int j = p_; j <= q_; ++j)
            if (in_window(i + j))
                action_[i][j - p_] = SparseMatrix(dim(i + j), algebra_->dim(i) * dim(j));
    }
}

GradedModule GradedModule::zero(AlgebraPtr algebra, int p, int q)
{
    int width = q >= p ? q - p + 1 : 0;
    return GradedModule(std::move(algebra), p, q, std::vector<Component>(width));
}

GradedModule GradedModule::from_algebra(AlgebraPtr algebra, int p, int q)
{
    if (p < 0 || q > algebra->max_degree())
        throw WindowViolation("algebra-as-module window exceeds the truncation");
    std::vector<Component> comps;
    for (int d = p; d <= q; ++d)
        comps.push_back(algebra->component(d));
    GradedModule m(algebra, p, q, std::move(comps));
    for (int i = m.min_action_degree(); i <= algebra->max_degree(); ++i)
        for (int j = p; j <= q; ++j)
            if (i + j <= q)
                m.set_action(i, j, algebra->mult(i, j));
    return m;
}

int GradedModule::dim(int d) const
{
    if (!in_window(d))
        return 0;
    return components_[d - p_].dim;
}

const Component& GradedModule::component(int d) const
{
    if (!in_window(d))
        throw WindowViolation("component outside window");
    return components_[d - p_];
}

const SparseMatrix& GradedModule::action(int i, int j) const
{
    if (i < min_action_degree() || i > algebra_->max_degree() || !in_window(j) ||
        !in_window(i + j))
        throw WindowViolation("action table outside window");
    return action_[i][j - p_];
}

void GradedModule::set_action(int i, int j, SparseMatrix table)
{
    if (i < min_action_degree() || i > algebra_->max_degree() || !in_window(j) ||
        !in_window(i + j))
        throw WindowViolation("action table outside window");
    if (table.rows() != dim(i + j) || table.cols() != algebra_->dim(i) * dim(j))
        throw ValidationError("action table shape mismatch");
    action_[i][j - p_] = std::move(table);
}

std::vector<Rational> GradedModule::act(int i, int j, const std::vector<Rational>& a,
                                        const std::vector<Rational>& m) const
{
    if (i == 0 && algebra_->unital()) {
        // Unit component acts by the scalar.
        std::vector<Rational> out(m);
        for (auto& x : out)
            x *= a[0];
        return out;
    }
    const SparseMatrix& t = action(i, j);
    int da = algebra_->dim(i);
    int dm = dim(j);
    std::vector<Rational> tensor(static_cast<size_t>(da) * dm, Rational(0));
    for (int x = 0; x < da; ++x) {
        if (a[x] == 0)
            continue;
        for (int y = 0; y < dm; ++y)
            if (m[y] != 0)
                tensor[static_cast<size_t>(x) * dm + y] = a[x] * m[y];
    }
    return t.apply(tensor);
}

std::vector<Rational> GradedModule::act_basis(int i, int a_index, int j,
                                              const std::vector<Rational>& m) const
{
    std::vector<Rational> a(algebra_->dim(i), Rational(0));
    a[a_index] = 1;
    return act(i, j, a, m);
}

std::map<int, int> GradedModule::hilbert_function() const
{
    std::map<int, int> h;
    for (int d = p_; d <= q_; ++d)
        h[d] = dim(d);
    return h;
}

GradedModule GradedModule::truncate(int p2, int q2) const
{
    if (p2 > q2) // empty range: the zero module on an empty window
        return GradedModule::zero(algebra_, p2, q2);
    if (p2 < p_ || q2 > q_)
        throw WindowViolation("truncation window not contained in [" + std::to_string(p_) + "," +
                              std::to_string(q_) + "]");
    std::vector<Component> comps(components_.begin() + (p2 - p_),
                                 components_.begin() + (q2 - p_ + 1));
    GradedModule m(algebra_, p2, q2, std::move(comps));
    for (int i = min_action_degree(); i <= algebra_->max_degree(); ++i)
        for (int j = p2; j <= q2; ++j)
            if (i + j <= q2)
                m.set_action(i, j, action(i, j));
    return m;
}

GradedModule GradedModule::twist(int n) const
{
    GradedModule m(algebra_, p_ - n, q_ - n, components_);
    for (int i = min_action_degree(); i <= algebra_->max_degree(); ++i)
        for (int j = p_ - n; j <= q_ - n; ++j)
            if (i + j <= q_ - n)
                m.set_action(i, j, action(i, j + n));
    return m;
}

namespace {

std::vector<Rational> unit_vector(int dim, int k)
{
    std::vector<Rational> v(dim, Rational(0));
    v[k] = 1;
    return v;
}

} // namespace

ValidationReport GradedModule::validate() const
{
    ValidationReport report;
    const GradedAlgebra& A = *algebra_;

    if (A.unital()) {
        // Unit action is implicit, nothing to check; but mixed associativity
        // with the unit is the identity by construction.
    }

    // a (b m) = (a b) m wherever all three degrees stay inside.
    int lo = min_action_degree();
    for (int i = lo; i <= A.max_degree(); ++i)
        for (int j = lo; i + j <= A.max_degree(); ++j)
            for (int d = p_; d <= q_; ++d) {
                if (!in_window(j + d) || !in_window(i + j + d))
                    continue;
                for (int x = 0; x < A.dim(i); ++x)
                    for (int y = 0; y < A.dim(j); ++y)
                        for (int z = 0; z < dim(d); ++z) {
                            auto ex = unit_vector(A.dim(i), x);
                            auto ey = unit_vector(A.dim(j), y);
                            auto ez = unit_vector(dim(d), z);
                            auto a_bm = act(i, j + d, ex, act(j, d, ey, ez));
                            auto ab_m = act(i + j, d, A.multiply(i, j, ex, ey), ez);
                            if (a_bm != ab_m)
                                report.violations.push_back(
                                    "mixed associativity fails at (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(d) + "), basis (" +
                                    A.basis_name(i, x) + "," + A.basis_name(j, y) + "," +
                                    basis_name(d, z) + ")");
                        }
            }
    return report;
}

std::string GradedModule::basis_name(int degree, int index) const
{
    const auto& names = component(degree).basis_names;
    if (index < static_cast<int>(names.size()))
        return names[index];
    return "m" + std::to_string(degree) + "_" + std::to_string(index);
}

const SparseMatrix& SubmodulePoint::basis(int d) const
{
    if (!ambient->in_window(d))
        throw WindowViolation("submodule basis outside window");
    return bases[d - ambient->window_low()];
}

int SubmodulePoint::sub_dim(int d) const
{
    if (!ambient->in_window(d))
        return 0;
    return bases[d - ambient->window_low()].cols();
}

std::vector<int> SubmodulePoint::dims() const
{
    std::vector<int> k;
    for (int d = ambient->window_low(); d <= ambient->window_high(); ++d)
        k.push_back(sub_dim(d));
    return k;
}

void SubmodulePoint::check_shapes() const
{
    if (!ambient)
        throw ValidationError("submodule point needs an ambient module");
    int width = ambient->window_high() - ambient->window_low() + 1;
    if (static_cast<int>(bases.size()) != width)
        throw ValidationError("submodule point needs one basis per window degree");
    for (int d = ambient->window_low(); d <= ambient->window_high(); ++d) {
        const SparseMatrix& b = basis(d);
        if (b.rows() != ambient->dim(d))
            throw ValidationError("submodule basis row count mismatch in degree " +
                                  std::to_string(d));
        if (rank(b) != b.cols())
            throw ValidationError("submodule basis not of full column rank in degree " +
                                  std::to_string(d));
    }
}

SubmodulePoint SubmodulePoint::whole(ModulePtr m)
{
    SubmodulePoint v;
    v.ambient = std::move(m);
    for (int d = v.ambient->window_low(); d <= v.ambient->window_high(); ++d)
        v.bases.push_back(SparseMatrix::identity(v.ambient->dim(d)));
    return v;
}

SubmodulePoint SubmodulePoint::zero(ModulePtr m)
{
    SubmodulePoint v;
    v.ambient = std::move(m);
    for (int d = v.ambient->window_low(); d <= v.ambient->window_high(); ++d)
        v.bases.push_back(SparseMatrix(v.ambient->dim(d), 0));
    return v;
}

GradedModule submodule_module(const SubmodulePoint& v)
{
    v.check_shapes();
    const GradedModule& M = *v.ambient;
    const GradedAlgebra& A = *M.algebra();
    int p = M.window_low(), q = M.window_high();

    std::vector<Component> comps;
    for (int d = p; d <= q; ++d) {
        Component c;
        c.dim = v.sub_dim(d);
        for (int k = 0; k < c.dim; ++k)
            c.basis_names.push_back("v" + std::to_string(d) + "_" + std::to_string(k));
        comps.push_back(std::move(c));
    }
    GradedModule S(M.algebra(), p, q, std::move(comps));

    for (int i = M.min_action_degree(); i <= A.max_degree(); ++i)
        for (int j = p; j <= q; ++j) {
            if (i + j > q)
                continue;
            SparseMatrix table(v.sub_dim(i + j), A.dim(i) * v.sub_dim(j));
            for (int x = 0; x < A.dim(i); ++x)
                for (int y = 0; y < v.sub_dim(j); ++y) {
                    auto image = M.act_basis(i, x, j, v.basis(j).column_vector(y));
                    auto coords = coordinates_in(v.basis(i + j), image);
                    if (!coords)
                        throw NotASubmodule("A_" + std::to_string(i) + " basis " +
                                            std::to_string(x) + " moves V_" + std::to_string(j) +
                                            " basis " + std::to_string(y) + " out of V_" +
                                            std::to_string(i + j));
                    for (int r = 0; r < v.sub_dim(i + j); ++r)
                        if ((*coords)[r] != 0)
                            table.set(r, x * v.sub_dim(j) + y, (*coords)[r]);
                }
            S.set_action(i, j, std::move(table));
        }
    return S;
}

QuotientModule quotient_module(const SubmodulePoint& v)
{
    v.check_shapes();
    const GradedModule& M = *v.ambient;
    const GradedAlgebra& A = *M.algebra();
    int p = M.window_low(), q = M.window_high();

    std::vector<SparseMatrix> projections;
    std::vector<Component> comps;
    for (int d = p; d <= q; ++d) {
        // Complement coordinates: non-pivot rows of the column-echelon basis.
        Echelon e = echelon_form(v.basis(d).transpose());
        std::vector<int> free_rows;
        for (int r = 0; r < M.dim(d); ++r)
            if (!e.is_pivot_col(r))
                free_rows.push_back(r);

        int k = static_cast<int>(free_rows.size());
        Component c;
        c.dim = k;
        for (int i = 0; i < k; ++i)
            c.basis_names.push_back("[" + M.basis_name(d, free_rows[i]) + "]");
        comps.push_back(std::move(c));

        // proj = bottom rows of [V | C]^{-1}: kills V, picks complement coords.
        SparseMatrix injection(M.dim(d), k);
        for (int i = 0; i < k; ++i)
            injection.set(free_rows[i], i, 1);
        SparseMatrix vc = v.basis(d).hcat(injection);
        auto inv = solve_matrix(vc, SparseMatrix::identity(M.dim(d)));
        if (!inv)
            throw ValidationError("quotient basis construction failed in degree " +
                                  std::to_string(d));
        SparseMatrix proj(k, M.dim(d));
        for (int i = 0; i < k; ++i)
            for (int c2 = 0; c2 < M.dim(d); ++c2) {
                const Rational& val = inv->at(v.sub_dim(d) + i, c2);
                if (val != 0)
                    proj.set(i, c2, val);
            }
        projections.push_back(std::move(proj));
    }

    GradedModule Q(M.algebra(), p, q, std::move(comps));
    for (int i = M.min_action_degree(); i <= A.max_degree(); ++i)
        for (int j = p; j <= q; ++j) {
            if (i + j > q)
                continue;
            int dq = Q.dim(j);
            SparseMatrix table(Q.dim(i + j), A.dim(i) * dq);
            // Lift quotient basis vectors through the complement injection.
            Echelon e = echelon_form(v.basis(j).transpose());
            std::vector<int> free_rows;
            for (int r = 0; r < M.dim(j); ++r)
                if (!e.is_pivot_col(r))
                    free_rows.push_back(r);
            for (int x = 0; x < A.dim(i); ++x)
                for (int y = 0; y < dq; ++y) {
                    std::vector<Rational> lift(M.dim(j), Rational(0));
                    lift[free_rows[y]] = 1;
                    auto image = M.act_basis(i, x, j, lift);
                    auto coords = projections[i + j - p].apply(image);
                    for (int r = 0; r < Q.dim(i + j); ++r)
                        if (coords[r] != 0)
                            table.set(r, x * dq + y, coords[r]);
                }
            Q.set_action(i, j, std::move(table));
        }

    QuotientModule out{std::move(Q), std::move(projections)};
    return out;
}

} // namespace qalg
