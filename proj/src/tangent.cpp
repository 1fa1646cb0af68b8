#include <qalg/tangent.hpp>

#include <qalg/errors.hpp>
#include <qalg/resolution.hpp>

namespace qalg {

namespace {

// The underlying graded module of a structure whose higher operations
// vanish: mu_1 columns become action tables.
GradedModule module_from_mu1(const AInfinityModule& s)
{
    const GradedModule& V = *s.space;
    std::vector<Component> comps;
    for (int d = V.window_low(); d <= V.window_high(); ++d)
        comps.push_back(V.component(d));
    GradedModule m(V.algebra(), V.window_low(), V.window_high(), std::move(comps));

    TupleSpace t1 = tuple_space(V, 1);
    const SparseMatrix& mu1 = s.mu.at(0);
    for (const TupleBlock& b : t1.blocks) {
        int i = b.comp[0];
        int j = b.j;
        if (!V.in_window(b.tot) || V.dim(b.tot) == 0)
            continue;
        SparseMatrix table(V.dim(b.tot), static_cast<int>(b.dim));
        long base = flat_offset(V, b.tot);
        for (long u = 0; u < b.dim; ++u) {
            std::vector<Rational> col = mu1.column_vector(static_cast<int>(b.offset + u));
            for (int r = 0; r < V.dim(b.tot); ++r)
                if (col[base + r] != 0)
                    table.set(r, static_cast<int>(u), col[base + r]);
        }
        m.set_action(i, j, std::move(table));
    }
    return m;
}

// Postcomposition Hom^0(T, V) -> Hom^0(T, M) with a per-degree inclusion
// incl_d : V_d -> M_d (columns of point bases).
SparseMatrix postcompose(const HomSpace& hv, const HomSpace& hm,
                         const std::vector<SparseMatrix>& incl, int p)
{
    SparseMatrix out(static_cast<int>(hm.dim), static_cast<int>(hv.dim));
    for (size_t b = 0; b < hv.source.blocks.size(); ++b) {
        const TupleBlock& blk = hv.source.blocks[b];
        int tv = hv.target_dim[b];
        int tm = hm.target_dim[b];
        if (tv == 0 || tm == 0)
            continue;
        const SparseMatrix& inc = incl.at(blk.tot - p);
        for (long s = 0; s < blk.dim; ++s)
            for (int t = 0; t < tv; ++t) {
                long col = hv.offset[b] + s * tv + t;
                for (int r = 0; r < tm; ++r) {
                    const Rational& c = inc.at(r, t);
                    if (c != 0)
                        out.set(static_cast<int>(hm.offset[b] + s * tm + r),
                                static_cast<int>(col), c);
                }
            }
    }
    return out;
}

void embed(SparseMatrix& dst, int r0, int c0, const SparseMatrix& src)
{
    for (int r = 0; r < src.rows(); ++r)
        for (const auto& [c, v] : src.row(r))
            dst.set(r0 + r, c0 + c, v);
}

} // namespace

TangentReport tangent_ract(const AInfinityModule& s, int arity_cap)
{
    if (arity_cap < 1)
        throw ValidationError("tangent_ract: arity_cap must be >= 1");
    s.validate_shapes();
    for (int n = 2; n <= s.arity(); ++n)
        if (!s.mu[n - 1].is_zero())
            throw ValidationError(
                "tangent_ract expects a strict module point (higher operations zero)");
    AInfCheckReport rep = check_ainf_module(s);
    if (!rep.ok)
        throw NotAnAction("tangent_ract: mu_1 is not an action: " + rep.witness);

    ModulePtr v = std::make_shared<GradedModule>(module_from_mu1(s));
    BarBuilder b(v, v);

    std::vector<int> dims;
    std::vector<SparseMatrix> diffs;
    for (int i = 0; i <= arity_cap; ++i)
        dims.push_back(static_cast<int>(b.term_dim(i + 1)));
    for (int i = 0; i < arity_cap; ++i)
        diffs.push_back(b.differential(i + 1));

    TangentReport out{CochainComplex(0, std::move(dims), std::move(diffs)), arity_cap - 1,
                      {}, {}, true};
    for (int i = 0; i <= out.valid_up_to; ++i)
        out.cohomology[i] = out.complex.cohomology(i);
    // H^0 is the cocycle space of the arity-1 term; H^i = Ext^{i+1}(V, V).
    out.oracle[0] = static_cast<int>(b.term_dim(1)) - rank(b.differential(1));
    for (int i = 1; i <= out.valid_up_to; ++i)
        out.oracle[i] = ext_bar(v, v, i + 1);
    for (int i = 0; i <= out.valid_up_to; ++i)
        if (out.cohomology.at(i) != out.oracle.at(i))
            out.pass = false;
    return out;
}

TangentReport rlin_cone(ModulePtr v, ModulePtr m, const SparseMatrix& f, int arity_cap)
{
    if (arity_cap < 1)
        throw ValidationError("rlin_cone: arity_cap must be >= 1");
    if (f.rows() != flat_dim(*m) || f.cols() != flat_dim(*v))
        throw ValidationError("rlin_cone: map has the wrong shape");
    BarBuilder b(v, m);

    // f as a vector of Hom^0(V, M) coordinates; off-degree entries are not
    // representable there.
    HomSpace h0 = b.term(0);
    SparseMatrix f_hom(static_cast<int>(h0.dim), 1);
    long captured = 0;
    for (size_t blk = 0; blk < h0.source.blocks.size(); ++blk) {
        const TupleBlock& B = h0.source.blocks[blk];
        int tn = h0.target_dim[blk];
        long vbase = flat_offset(*v, B.j);
        long mbase = flat_offset(*m, B.tot);
        for (long s = 0; s < B.dim; ++s)
            for (int t = 0; t < tn; ++t) {
                const Rational& c = f.at(static_cast<int>(mbase + t),
                                         static_cast<int>(vbase + s));
                if (c != 0) {
                    f_hom.set(static_cast<int>(h0.offset[blk] + s * tn + t), 0, c);
                    ++captured;
                }
            }
    }
    if (captured != f.nnz())
        throw InconsistentGrading("rlin_cone: the map is not of degree zero");

    // d(1) = delta f; a cocycle because delta f = d^0(f).
    SparseMatrix d_minus1 = b.differential(0) * f_hom;

    std::vector<int> dims{1};
    std::vector<SparseMatrix> diffs{d_minus1};
    for (int i = 0; i <= arity_cap; ++i)
        dims.push_back(static_cast<int>(b.term_dim(i + 1)));
    for (int i = 0; i < arity_cap; ++i)
        diffs.push_back(b.differential(i + 1));

    TangentReport out{CochainComplex(-1, std::move(dims), std::move(diffs)),
                      arity_cap - 1,
                      {}};
    for (int i = -1; i <= out.valid_up_to; ++i)
        out.cohomology[i] = out.complex.cohomology(i);
    return out;
}

TangentReport tangent_rg_cone(const SubmodulePoint& point, int arity_cap)
{
    if (arity_cap < 1)
        throw ValidationError("tangent_rg_cone: arity_cap must be >= 1");
    point.check_shapes();
    ModulePtr v = std::make_shared<GradedModule>(submodule_module(point));
    ModulePtr m = point.ambient;
    int p = m->window_low();

    BarBuilder bv(v, v);
    BarBuilder bm(v, m);

    std::vector<long> xdim, ydim; // per complex index i >= -1, shifted by 1
    std::vector<HomSpace> hv, hm;
    for (int n = 0; n <= arity_cap + 1; ++n) {
        hv.push_back(bv.term(n));
        hm.push_back(bm.term(n));
    }

    // C^{-1} = Hom^0(V, V); C^i = Hom^0(T_{i+1}, V) (+) Hom^0(T_i, M).
    std::vector<int> dims;
    dims.push_back(static_cast<int>(hv[0].dim));
    for (int i = 0; i <= arity_cap; ++i)
        dims.push_back(static_cast<int>(hv[i + 1].dim + hm[i].dim));

    std::vector<SparseMatrix> diffs;
    {
        // d x0 = (-delta x0, incl o x0)
        SparseMatrix d(dims[1], dims[0]);
        embed(d, 0, 0, bv.differential(0) * Rational(-1));
        embed(d, static_cast<int>(hv[1].dim), 0, postcompose(hv[0], hm[0], point.bases, p));
        diffs.push_back(std::move(d));
    }
    for (int i = 0; i < arity_cap; ++i) {
        // d (x, y) = (-delta x, incl o x + delta y)
        SparseMatrix d(dims[i + 2], dims[i + 1]);
        embed(d, 0, 0, bv.differential(i + 1) * Rational(-1));
        embed(d, static_cast<int>(hv[i + 2].dim), 0,
              postcompose(hv[i + 1], hm[i + 1], point.bases, p));
        embed(d, static_cast<int>(hv[i + 2].dim), static_cast<int>(hv[i + 1].dim),
              bm.differential(i));
        diffs.push_back(std::move(d));
    }

    TangentReport out{CochainComplex(-1, std::move(dims), std::move(diffs)),
                      arity_cap - 1,
                      {}};
    for (int i = -1; i <= out.valid_up_to; ++i)
        out.cohomology[i] = out.complex.cohomology(i);
    // Independent route: classical Ext into the quotient, via minimal free
    // resolutions (available in the graded, unital case).
    if (m->algebra()->unital()) {
        auto quot = std::make_shared<GradedModule>(quotient_module(point).module);
        for (int i = 0; i <= out.valid_up_to; ++i) {
            out.oracle[i] = ext_free(v, quot, i);
            if (out.cohomology.at(i) != out.oracle.at(i))
                out.pass = false;
        }
    }
    return out;
}

DerivedQuotTangent derived_quot_tangent(const CoordinateRing& ring,
                                        const std::vector<Poly>& submodule_gens, int p, int q,
                                        int i_max)
{
    if (i_max < 0)
        throw ValidationError("derived_quot_tangent: i_max must be >= 0");
    DerivedQuotTangent out;
    for (int widen = 0; widen <= 2; ++widen) {
        SubmodulePoint point = ideal_submodule(ring, submodule_gens, p, q + widen);
        out.reports.push_back(tangent_rg_cone(point, i_max + 1));
    }
    for (int i = 0; i <= i_max; ++i) {
        int h = out.reports[0].cohomology.at(i);
        for (int widen = 1; widen <= 2; ++widen) {
            int hw = out.reports[widen].cohomology.at(i);
            if (hw != h)
                throw WindowUnstable("tangent cohomology in degree " + std::to_string(i) +
                                     " moves from " + std::to_string(h) + " to " +
                                     std::to_string(hw) + " on widening the window to [" +
                                     std::to_string(p) + ", " + std::to_string(q + widen) +
                                     "]");
        }
        out.cohomology[i] = h;
    }
    return out;
}

} // namespace qalg
