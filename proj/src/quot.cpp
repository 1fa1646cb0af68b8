#include <qalg/quot.hpp>

#include <qalg/errors.hpp>

namespace qalg {

std::vector<GradedElement> effective_generators(const GradedAlgebra& a)
{
    if (!a.generators().empty())
        return a.generators();
    std::vector<GradedElement> gens;
    for (int i = a.unital() ? 1 : 0; i <= a.max_degree(); ++i)
        for (int k = 0; k < a.dim(i); ++k) {
            GradedElement g;
            g.degree = i;
            g.coords.assign(a.dim(i), Rational(0));
            g.coords[k] = 1;
            gens.push_back(std::move(g));
        }
    return gens;
}

SubmoduleWitness is_submodule(const SubmodulePoint& v)
{
    v.check_shapes();
    const GradedModule& m = *v.ambient;
    std::vector<GradedElement> gens = effective_generators(*m.algebra());

    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int e = gens[gi].degree;
        for (int j = m.window_low(); j + e <= m.window_high(); ++j) {
            const SparseMatrix& basis = v.basis(j);
            for (int k = 0; k < basis.cols(); ++k) {
                std::vector<Rational> image =
                    m.act(e, j, gens[gi].coords, basis.column_vector(k));
                if (!in_span(v.basis(j + e), image)) {
                    SubmoduleWitness w;
                    w.ok = false;
                    w.generator_degree = e;
                    w.generator_index = static_cast<int>(gi);
                    w.degree = j;
                    w.vector = std::move(image);
                    w.message = "action of a degree-" + std::to_string(e) +
                                " generator leaves the subspace at degree " +
                                std::to_string(j);
                    return w;
                }
            }
        }
    }
    return {};
}

std::vector<SectionValue> section_values(const SubmodulePoint& v)
{
    v.check_shapes();
    const GradedModule& m = *v.ambient;
    int p = m.window_low();
    QuotientModule qm = quotient_module(v);
    std::vector<GradedElement> gens = effective_generators(*m.algebra());

    std::vector<SectionValue> out;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        int e = gens[gi].degree;
        for (int j = p; j + e <= m.window_high(); ++j) {
            const SparseMatrix& basis = v.basis(j);
            const SparseMatrix& proj = qm.projection[j + e - p];
            SectionValue sv;
            sv.generator_degree = e;
            sv.generator_index = static_cast<int>(gi);
            sv.degree = j;
            sv.residual = SparseMatrix(proj.rows(), basis.cols());
            for (int k = 0; k < basis.cols(); ++k) {
                std::vector<Rational> image =
                    proj.apply(m.act(e, j, gens[gi].coords, basis.column_vector(k)));
                sv.residual.set_column(k, image);
            }
            out.push_back(std::move(sv));
        }
    }
    return out;
}

ClassicalTangent tangent_classical(const SubmodulePoint& v)
{
    SubmoduleWitness w = is_submodule(v);
    if (!w.ok)
        throw NotASubmodule(w.message);
    const GradedModule& m = *v.ambient;
    int p = m.window_low(), q = m.window_high();
    QuotientModule qm = quotient_module(v);
    const GradedModule& quot = qm.module;
    std::vector<GradedElement> gens = effective_generators(*m.algebra());

    // Unknowns: the entries of phi_d : V_d -> (M/V)_d, flattened as
    // r * dim V_d + c within the degree-d block.
    std::vector<long> offset(q - p + 2, 0);
    for (int d = p; d <= q; ++d)
        offset[d - p + 1] =
            offset[d - p] + static_cast<long>(quot.dim(d)) * v.sub_dim(d);
    long unknowns = offset[q - p + 1];

    // Equations: phi_{j+e}(g v) = g phi_j(v) for each generator g of degree
    // e, window degree j, and basis column v of V_j.
    SparseMatrix eqs(0, static_cast<int>(unknowns));
    std::vector<std::map<int, Rational>> rows;
    for (const GradedElement& g : gens) {
        int e = g.degree;
        for (int j = p; j + e <= q; ++j) {
            const SparseMatrix& basis = v.basis(j);
            int kj = basis.cols(), kje = v.sub_dim(j + e);
            int qj = quot.dim(j), qje = quot.dim(j + e);
            if (kj == 0 || qje == 0)
                continue;
            for (int c = 0; c < kj; ++c) {
                std::vector<Rational> image =
                    m.act(e, j, g.coords, basis.column_vector(c));
                std::optional<std::vector<Rational>> coords =
                    coordinates_in(v.basis(j + e), image);
                if (!coords)
                    throw NotASubmodule("action leaves the subspace at degree " +
                                        std::to_string(j));
                for (int r2 = 0; r2 < qje; ++r2) {
                    std::map<int, Rational> row;
                    // phi_{j+e} applied to the coordinates of g v
                    for (int c2 = 0; c2 < kje; ++c2)
                        if ((*coords)[c2] != 0)
                            row[static_cast<int>(offset[j + e - p] + r2 * kje + c2)] +=
                                (*coords)[c2];
                    // minus g . phi_j(v): the action of g on each basis
                    // vector of (M/V)_j
                    for (int r1 = 0; r1 < qj; ++r1) {
                        std::vector<Rational> eq(qj, Rational(0));
                        eq[r1] = 1;
                        std::vector<Rational> gq = quot.act(e, j, g.coords, eq);
                        const Rational& coeff = gq[r2];
                        if (coeff != 0)
                            row[static_cast<int>(offset[j - p] + r1 * kj + c)] -= coeff;
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    SparseMatrix system(static_cast<int>(rows.size()), static_cast<int>(unknowns));
    for (size_t r = 0; r < rows.size(); ++r)
        for (const auto& [cc, val] : rows[r])
            if (val != 0)
                system.set(static_cast<int>(r), cc, val);

    ClassicalTangent out;
    out.basis = kernel_basis(system);
    out.dimension = out.basis.cols();
    return out;
}

SubmodulePoint generate_from_bottom(ModulePtr m, int p, const SparseMatrix& w_p)
{
    const GradedModule& mm = *m;
    if (!mm.in_window(p))
        throw WindowViolation("bottom degree outside the window");
    if (w_p.rows() != mm.dim(p))
        throw ValidationError("bottom subspace has the wrong ambient dimension");
    const GradedAlgebra& a = *mm.algebra();

    SubmodulePoint out;
    out.ambient = m;
    for (int d = mm.window_low(); d <= mm.window_high(); ++d) {
        if (d < p) {
            out.bases.push_back(SparseMatrix(mm.dim(d), 0));
            continue;
        }
        int j = d - p;
        if (j == 0) {
            out.bases.push_back(span_basis(w_p));
            continue;
        }
        SparseMatrix images(mm.dim(d), 0);
        if (j <= a.max_degree() && a.dim(j) > 0) {
            images = SparseMatrix(mm.dim(d), a.dim(j) * w_p.cols());
            for (int ai = 0; ai < a.dim(j); ++ai)
                for (int k = 0; k < w_p.cols(); ++k) {
                    std::vector<Rational> im =
                        mm.act_basis(j, ai, p, w_p.column_vector(k));
                    images.set_column(ai * w_p.cols() + k, im);
                }
        }
        out.bases.push_back(span_basis(images));
    }
    return out;
}

} // namespace qalg
