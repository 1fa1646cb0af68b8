#include <qalg/ingestion.hpp>

#include <qalg/errors.hpp>

namespace qalg {

CoordinateRing::CoordinateRing(IdealPresentation ip) : ip_(std::move(ip))
{
    if (ip_.num_vars < 0)
        throw ValidationError("number of variables must be >= 0");
    if (ip_.max_degree < 0)
        throw ValidationError("truncation bound must be >= 0");
    weights_ = ip_.var_degrees.empty() ? std::vector<int>(ip_.num_vars, 1) : ip_.var_degrees;
    if (static_cast<int>(weights_.size()) != ip_.num_vars)
        throw ValidationError("one degree per variable required");
    for (int w : weights_)
        if (w < 1)
            throw ValidationError("variable degrees must be >= 1");
    for (const Poly& g : ip_.generators) {
        int d = 0;
        if (!is_homogeneous(g, weights_, &d))
            throw InconsistentGrading("ideal generator is not homogeneous: " +
                                      poly_to_string(g, default_var_names(ip_.num_vars),
                                                     weights_));
        for (const auto& [e, c] : g) {
            (void)c;
            if (static_cast<int>(e.size()) != ip_.num_vars)
                throw ValidationError("ideal generator has wrong variable count");
        }
    }

    auto names = default_var_names(ip_.num_vars);
    std::vector<Component> comps;
    for (int d = 0; d <= ip_.max_degree; ++d) {
        monomials_.push_back(monomials_of_degree(ip_.num_vars, weights_, d));
        std::map<Exponents, int> index;
        for (size_t i = 0; i < monomials_[d].size(); ++i)
            index[monomials_[d][i]] = static_cast<int>(i);
        monomial_index_.push_back(std::move(index));

        // Span of I_d inside S_d: all monomial multiples of the generators.
        int sd = static_cast<int>(monomials_[d].size());
        SparseMatrix relations(sd, 0);
        for (const Poly& g : ip_.generators) {
            int e = 0;
            is_homogeneous(g, weights_, &e);
            if (g.empty() || e > d)
                continue;
            for (const Exponents& m : monomials_of_degree(ip_.num_vars, weights_, d - e)) {
                Poly prod = poly_mul(poly_monomial(m), g);
                std::vector<Rational> col(sd, Rational(0));
                for (const auto& [em, c] : prod)
                    col[monomial_index_[d].at(em)] = c;
                relations = relations.hcat(SparseMatrix::from_column(col));
            }
        }
        reducers_.push_back(quotient_space(relations));

        std::vector<Exponents> basis;
        Component comp;
        comp.dim = reducers_[d].dim();
        for (int k : reducers_[d].kept) {
            basis.push_back(monomials_[d][k]);
            comp.basis_names.push_back(monomial_to_string(monomials_[d][k], names));
        }
        basis_.push_back(std::move(basis));
        comps.push_back(std::move(comp));
    }

    auto algebra =
        std::make_shared<GradedAlgebra>(ip_.max_degree, std::move(comps), true, true);
    for (int i = 0; i <= ip_.max_degree; ++i)
        for (int j = 0; i + j <= ip_.max_degree; ++j) {
            int di = static_cast<int>(basis_[i].size());
            int dj = static_cast<int>(basis_[j].size());
            SparseMatrix table(static_cast<int>(basis_[i + j].size()), di * dj);
            for (int x = 0; x < di; ++x)
                for (int y = 0; y < dj; ++y) {
                    Poly prod = poly_mul(poly_monomial(basis_[i][x]), poly_monomial(basis_[j][y]));
                    auto coords = reduce_raw(prod, i + j);
                    for (size_t r = 0; r < coords.size(); ++r)
                        if (coords[r] != 0)
                            table.set(static_cast<int>(r), x * dj + y, coords[r]);
                }
            algebra->set_mult(i, j, std::move(table));
        }

    std::vector<GradedElement> gens;
    for (int v = 0; v < ip_.num_vars; ++v) {
        if (weights_[v] > ip_.max_degree)
            continue;
        Exponents e(ip_.num_vars, 0);
        e[v] = 1;
        gens.push_back({weights_[v], reduce_at(poly_monomial(e), weights_[v])});
    }
    algebra->set_generators(std::move(gens));
    algebra_ = std::move(algebra);
}

const std::vector<Exponents>& CoordinateRing::monomials(int d) const
{
    if (d < 0 || d > ip_.max_degree)
        throw WindowViolation("monomials outside truncation");
    return monomials_[d];
}

const std::vector<Exponents>& CoordinateRing::basis_monomials(int d) const
{
    if (d < 0 || d > ip_.max_degree)
        throw WindowViolation("basis monomials outside truncation");
    return basis_[d];
}

std::vector<Rational> CoordinateRing::reduce_raw(const Poly& f, int d) const
{
    std::vector<Rational> amb(monomials_[d].size(), Rational(0));
    for (const auto& [e, c] : f) {
        auto it = monomial_index_[d].find(e);
        if (it == monomial_index_[d].end())
            throw InconsistentGrading("monomial of unexpected degree while reducing");
        amb[it->second] = c;
    }
    return reducers_[d].projection.apply(amb);
}

std::vector<Rational> CoordinateRing::reduce_at(const Poly& f, int d) const
{
    if (d < 0 || d > ip_.max_degree)
        throw WindowViolation("reduction outside truncation");
    int df = 0;
    if (!is_homogeneous(f, weights_, &df))
        throw InconsistentGrading("cannot reduce an inhomogeneous polynomial");
    if (!f.empty() && df != d)
        throw InconsistentGrading("polynomial degree " + std::to_string(df) +
                                  " does not match requested degree " + std::to_string(d));
    return reduce_raw(f, d);
}

std::vector<Rational> CoordinateRing::reduce(const Poly& f) const
{
    int d = 0;
    if (!is_homogeneous(f, weights_, &d))
        throw InconsistentGrading("cannot reduce an inhomogeneous polynomial");
    return reduce_at(f, d);
}

GradedModule CoordinateRing::ring_module(int p, int q) const
{
    return GradedModule::from_algebra(algebra_, p, q);
}

GradedModule free_module(AlgebraPtr algebra, const std::vector<int>& gen_degrees, int p, int q)
{
    const GradedAlgebra& A = *algebra;
    if (!A.unital())
        throw ValidationError("free modules require a unital algebra");
    int g = static_cast<int>(gen_degrees.size());

    // Block offsets per degree: F_d = (+)_k A_{d - deg_k}.
    auto block_dims = [&](int d) {
        std::vector<int> dims(g);
        for (int k = 0; k < g; ++k)
            dims[k] = A.dim(d - gen_degrees[k]);
        return dims;
    };
    std::vector<Component> comps;
    for (int d = p; d <= q; ++d) {
        Component c;
        auto dims = block_dims(d);
        for (int k = 0; k < g; ++k) {
            c.dim += dims[k];
            for (int x = 0; x < dims[k]; ++x)
                c.basis_names.push_back("g" + std::to_string(k) + "*" +
                                        A.basis_name(d - gen_degrees[k], x));
        }
        comps.push_back(std::move(c));
    }
    GradedModule F(algebra, p, q, std::move(comps));
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = p; j <= q; ++j) {
            if (i + j > q)
                continue;
            auto sdims = block_dims(j);
            auto tdims = block_dims(i + j);
            int sdim = F.dim(j);
            SparseMatrix table(F.dim(i + j), A.dim(i) * sdim);
            int soff = 0, toff = 0;
            for (int k = 0; k < g; ++k) {
                int jj = j - gen_degrees[k];
                if (sdims[k] > 0 && tdims[k] > 0) {
                    const SparseMatrix& m = A.mult(i, jj);
                    for (int x = 0; x < A.dim(i); ++x)
                        for (int y = 0; y < sdims[k]; ++y)
                            for (int r = 0; r < tdims[k]; ++r) {
                                const Rational& v = m.at(r, x * sdims[k] + y);
                                if (v != 0)
                                    table.set(toff + r, x * sdim + (soff + y), v);
                            }
                }
                soff += sdims[k];
                toff += tdims[k];
            }
            F.set_action(i, j, std::move(table));
        }
    return F;
}

GradedModule module_from_presentation(const CoordinateRing& r, const ModulePresentation& mp)
{
    const GradedAlgebra& A = *r.algebra();
    int g = static_cast<int>(mp.gen_degrees.size());
    int p = mp.p, q = mp.q;
    if (p > q)
        return GradedModule::zero(r.algebra(), p, q);
    for (int k = 0; k < g; ++k)
        if (q - mp.gen_degrees[k] > A.max_degree())
            throw WindowViolation("window requires algebra components beyond the truncation");

    // Relation degrees: deg(rho_k) + gen degree k must agree over nonzero k.
    std::vector<int> rel_degree;
    for (const auto& rel : mp.relations) {
        if (static_cast<int>(rel.size()) != g)
            throw ValidationError("relation needs one coefficient per generator");
        int e = 0;
        bool seen = false;
        for (int k = 0; k < g; ++k) {
            if (rel[k].empty())
                continue;
            int dk = 0;
            if (!is_homogeneous(rel[k], r.weights(), &dk))
                throw InconsistentGrading("relation coefficient is not homogeneous");
            int total = dk + mp.gen_degrees[k];
            if (seen && total != e)
                throw InconsistentGrading("relation is not homogeneous across generators");
            e = total;
            seen = true;
        }
        rel_degree.push_back(seen ? e : p - 1);
    }

    // Per degree: quotient of the free component by the span of all
    // A-monomial multiples of the relations.
    std::vector<QuotientSpace> quots;
    std::vector<Component> comps;
    auto block_dim = [&](int d, int k) {
        int dd = d - mp.gen_degrees[k];
        return (dd < 0 || dd > A.max_degree()) ? 0 : static_cast<int>(r.basis_monomials(dd).size());
    };
    for (int d = p; d <= q; ++d) {
        int fdim = 0;
        std::vector<int> off(g, 0);
        for (int k = 0; k < g; ++k) {
            off[k] = fdim;
            fdim += block_dim(d, k);
        }
        SparseMatrix relations(fdim, 0);
        for (size_t ri = 0; ri < mp.relations.size(); ++ri) {
            int e = rel_degree[ri];
            if (e > d || d - e < 0 || d - e > A.max_degree())
                continue;
            for (const Exponents& m : r.basis_monomials(d - e)) {
                std::vector<Rational> col(fdim, Rational(0));
                for (int k = 0; k < g; ++k) {
                    if (mp.relations[ri][k].empty() || block_dim(d, k) == 0)
                        continue;
                    Poly prod = poly_mul(poly_monomial(m), mp.relations[ri][k]);
                    auto coords = r.reduce_at(prod, d - mp.gen_degrees[k]);
                    for (size_t x = 0; x < coords.size(); ++x)
                        col[off[k] + static_cast<int>(x)] = coords[x];
                }
                relations = relations.hcat(SparseMatrix::from_column(col));
            }
        }
        quots.push_back(quotient_space(relations));
        Component c;
        c.dim = quots.back().dim();
        for (int kept : quots.back().kept) {
            int k = 0;
            while (k + 1 < g && kept >= off[k + 1])
                ++k;
            int dd = d - mp.gen_degrees[k];
            c.basis_names.push_back(
                "[g" + std::to_string(k) + "*" +
                monomial_to_string(r.basis_monomials(dd)[kept - off[k]],
                                   default_var_names(r.num_vars())) +
                "]");
        }
        comps.push_back(std::move(c));
    }

    GradedModule M(r.algebra(), p, q, std::move(comps));
    auto names = default_var_names(r.num_vars());
    (void)names;
    for (int i = 1; i <= A.max_degree(); ++i)
        for (int j = p; j <= q; ++j) {
            if (i + j > q)
                continue;
            const QuotientSpace& qs = quots[j - p];
            const QuotientSpace& qt = quots[i + j - p];
            int sdim = M.dim(j);
            SparseMatrix table(M.dim(i + j), A.dim(i) * sdim);
            std::vector<int> soff(g, 0), toff(g, 0);
            {
                int acc = 0;
                for (int k = 0; k < g; ++k) {
                    soff[k] = acc;
                    acc += block_dim(j, k);
                }
                acc = 0;
                for (int k = 0; k < g; ++k) {
                    toff[k] = acc;
                    acc += block_dim(i + j, k);
                }
            }
            int tfdim = 0;
            for (int k = 0; k < g; ++k)
                tfdim += block_dim(i + j, k);
            for (int x = 0; x < A.dim(i); ++x) {
                Poly ax = poly_monomial(r.basis_monomials(i)[x]);
                for (int y = 0; y < sdim; ++y) {
                    int kept = qs.kept[y];
                    int k = 0;
                    while (k + 1 < g && kept >= soff[k + 1])
                        ++k;
                    int dd = j - mp.gen_degrees[k];
                    Poly prod = poly_mul(ax, poly_monomial(r.basis_monomials(dd)[kept - soff[k]]));
                    auto coords = r.reduce_at(prod, i + dd);
                    std::vector<Rational> free_vec(tfdim, Rational(0));
                    for (size_t s = 0; s < coords.size(); ++s)
                        free_vec[toff[k] + static_cast<int>(s)] = coords[s];
                    auto img = qt.projection.apply(free_vec);
                    for (size_t rr = 0; rr < img.size(); ++rr)
                        if (img[rr] != 0)
                            table.set(static_cast<int>(rr), x * sdim + y, img[rr]);
                }
            }
            M.set_action(i, j, std::move(table));
        }
    return M;
}

SubmodulePoint ideal_submodule(const CoordinateRing& r, const std::vector<Poly>& gens, int p,
                               int q)
{
    SubmodulePoint v;
    v.ambient = std::make_shared<GradedModule>(r.ring_module(p, q));
    for (const Poly& gp : gens) {
        int e = 0;
        if (!is_homogeneous(gp, r.weights(), &e))
            throw InconsistentGrading("submodule generator is not homogeneous");
    }
    for (int d = p; d <= q; ++d) {
        int ad = static_cast<int>(r.basis_monomials(d).size());
        SparseMatrix cols(ad, 0);
        for (const Poly& gp : gens) {
            int e = 0;
            is_homogeneous(gp, r.weights(), &e);
            if (gp.empty() || e > d)
                continue;
            for (const Exponents& m : r.monomials(d - e)) {
                auto coords = r.reduce_at(poly_mul(poly_monomial(m), gp), d);
                cols = cols.hcat(SparseMatrix::from_column(coords));
            }
        }
        v.bases.push_back(span_basis(cols));
    }
    return v;
}

SubmodulePoint ideal_submodule(const CoordinateRing& r, const std::vector<std::string>& gens,
                               int p, int q)
{
    std::vector<Poly> parsed;
    for (const auto& s : gens)
        parsed.push_back(parse_poly(s, r.num_vars()));
    return ideal_submodule(r, parsed, p, q);
}

} // namespace qalg
