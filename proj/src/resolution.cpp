#include <qalg/resolution.hpp>

#include <qalg/errors.hpp>
#include <qalg/ingestion.hpp>
#include <qalg/solve.hpp>

namespace qalg {

namespace {

// Minimal generators of a graded subspace K (per-degree bases inside an
// ambient module M): the columns of K_d enlarging sum_{i>=1} A_i K_{d-i}.
// For layer 0, K is all of V (identity bases).
struct Generators {
    std::vector<int> degrees;
    std::vector<std::vector<Rational>> vectors; // coordinates in M at degree
};

Generators minimal_generators(const GradedModule& m, const std::vector<SparseMatrix>& k_bases)
{
    const GradedAlgebra& A = *m.algebra();
    int p = m.window_low(), q = m.window_high();
    Generators g;
    for (int d = p; d <= q; ++d) {
        const SparseMatrix& kd = k_bases[d - p];
        if (kd.cols() == 0)
            continue;
        SparseMatrix span(m.dim(d), 0);
        for (int i = 1; i <= A.max_degree(); ++i) {
            int j = d - i;
            if (!m.in_window(j))
                continue;
            const SparseMatrix& kj = k_bases[j - p];
            for (int x = 0; x < A.dim(i); ++x)
                for (int y = 0; y < kj.cols(); ++y) {
                    auto img = m.act_basis(i, x, j, kj.column_vector(y));
                    span = span.hcat(SparseMatrix::from_column(img));
                }
        }
        SparseMatrix fresh = complement_in_span(span, kd);
        for (int c = 0; c < fresh.cols(); ++c) {
            g.degrees.push_back(d);
            g.vectors.push_back(fresh.column_vector(c));
        }
    }
    return g;
}

} // namespace

FreeResolutionWindow::FreeResolutionWindow(ModulePtr v, int length) : v_(std::move(v))
{
    if (!v_)
        throw ValidationError("resolution needs a module");
    const GradedAlgebra& A = *v_->algebra();
    if (!A.unital())
        throw ValidationError("free resolutions require a unital algebra");
    int p = v_->window_low(), q = v_->window_high();
    if (p > q)
        throw WindowTooShort("resolution of a module on an empty window", p);

    // Per-degree bases of the current kernel inside the previous layer
    // (layer 0: inside V, where the kernel is all of V).
    const GradedModule* prev = v_.get();
    std::vector<SparseMatrix> k_bases;
    for (int d = p; d <= q; ++d)
        k_bases.push_back(SparseMatrix::identity(v_->dim(d)));

    for (int l = 0; l <= length; ++l) {
        Generators g = minimal_generators(*prev, k_bases);
        Layer layer;
        layer.gen_degrees = g.degrees;
        layer.gen_vectors = g.vectors;
        layer.free =
            std::make_shared<GradedModule>(free_module(v_->algebra(), g.degrees, p, q));
        layers_.push_back(std::move(layer));

        if (l == length)
            break;
        // Kernel of the boundary per degree, a submodule of this layer.
        std::vector<SparseMatrix> next_bases;
        for (int d = p; d <= q; ++d)
            next_bases.push_back(kernel_basis(boundary(l, d)));
        prev = layers_[l].free.get();
        k_bases = std::move(next_bases);
    }
}

const std::vector<int>& FreeResolutionWindow::gen_degrees(int l) const
{
    return layers_.at(l).gen_degrees;
}

const std::vector<std::vector<Rational>>& FreeResolutionWindow::gen_vectors(int l) const
{
    return layers_.at(l).gen_vectors;
}

const GradedModule& FreeResolutionWindow::layer(int l) const
{
    return *layers_.at(l).free;
}

SparseMatrix FreeResolutionWindow::boundary(int l, int d) const
{
    const GradedModule& target = l == 0 ? *v_ : *layers_.at(l - 1).free;
    const GradedModule& source = *layers_.at(l).free;
    if (!source.in_window(d))
        throw WindowViolation("boundary outside window");
    const GradedAlgebra& A = *v_->algebra();
    const auto& degs = layers_[l].gen_degrees;
    const auto& vecs = layers_[l].gen_vectors;

    SparseMatrix b(target.dim(d), source.dim(d));
    int col = 0;
    for (size_t k = 0; k < degs.size(); ++k) {
        int dk = degs[k];
        int i = d - dk;
        if (i < 0 || i > A.max_degree() || A.dim(i) == 0)
            continue;
        for (int x = 0; x < A.dim(i); ++x) {
            std::vector<Rational> img;
            if (i == 0)
                img = vecs[k]; // unit basis element
            else
                img = target.act_basis(i, x, dk, vecs[k]);
            for (int r = 0; r < target.dim(d); ++r)
                if (img[r] != 0)
                    b.set(r, col, img[r]);
            ++col;
        }
    }
    return b;
}

namespace {

// Hom(F^l, N) coordinates: per generator k, the coordinates of the value.
// DegreeZero: value in N_{deg g_k}. All: value in the whole of N.
struct HomLayer {
    std::vector<long> offset; // per generator
    std::vector<int> dims;    // per generator
    long dim = 0;
};

HomLayer hom_layer(const FreeResolutionWindow& res, int l, const GradedModule& n,
                   HomGrading grading)
{
    HomLayer h;
    int total = 0;
    for (int d = n.window_low(); d <= n.window_high(); ++d)
        total += n.dim(d);
    for (int dk : res.gen_degrees(l)) {
        h.offset.push_back(h.dim);
        int dd = grading == HomGrading::DegreeZero ? n.dim(dk) : total;
        h.dims.push_back(dd);
        h.dim += dd;
    }
    return h;
}

// Coordinates of component degree d within the all-degrees flattening of N.
long all_offset(const GradedModule& n, int d)
{
    long off = 0;
    for (int e = n.window_low(); e < d; ++e)
        off += n.dim(e);
    return off;
}

// phi |-> phi o boundary : Hom(F^{l-1}, N) -> Hom(F^l, N)
SparseMatrix hom_differential(const FreeResolutionWindow& res, int l, const GradedModule& n,
                              HomGrading grading)
{
    const GradedAlgebra& A = *n.algebra();
    HomLayer src = hom_layer(res, l - 1, n, grading);
    HomLayer dst = hom_layer(res, l, n, grading);
    SparseMatrix d(static_cast<int>(dst.dim), static_cast<int>(src.dim));

    const auto& degs = res.gen_degrees(l);
    const auto& prev_degs = res.gen_degrees(l - 1);
    const GradedModule& prev = res.layer(l - 1);

    for (size_t k = 0; k < degs.size(); ++k) {
        int dk = degs[k];
        const std::vector<Rational>& dg = res.gen_vectors(l)[k]; // in F^{l-1}_{dk}
        // Decompose into generator blocks of F^{l-1}.
        int off = 0;
        for (size_t k2 = 0; k2 < prev_degs.size(); ++k2) {
            int delta = dk - prev_degs[k2];
            int bdim = (delta < 0 || delta > A.max_degree()) ? 0 : A.dim(delta);
            if (bdim == 0)
                continue;
            std::vector<Rational> alpha(dg.begin() + off, dg.begin() + off + bdim);
            off += bdim;
            bool zero = true;
            for (const auto& c : alpha)
                if (c != 0)
                    zero = false;
            if (zero)
                continue;

            if (grading == HomGrading::DegreeZero) {
                int d0 = prev_degs[k2];
                if (src.dims[k2] == 0 || dst.dims[k] == 0)
                    continue;
                for (int t = 0; t < src.dims[k2]; ++t) {
                    std::vector<Rational> e(src.dims[k2], Rational(0));
                    e[t] = 1;
                    auto w = n.act(delta, d0, alpha, e);
                    for (int r = 0; r < dst.dims[k]; ++r)
                        if (w[r] != 0)
                            d.add_to(static_cast<int>(dst.offset[k] + r),
                                     static_cast<int>(src.offset[k2] + t), w[r]);
                }
            } else {
                for (int d0 = n.window_low(); d0 <= n.window_high(); ++d0) {
                    if (n.dim(d0) == 0 || !n.in_window(d0 + delta) || n.dim(d0 + delta) == 0)
                        continue;
                    long soff = src.offset[k2] + all_offset(n, d0);
                    long toff = dst.offset[k] + all_offset(n, d0 + delta);
                    for (int t = 0; t < n.dim(d0); ++t) {
                        std::vector<Rational> e(n.dim(d0), Rational(0));
                        e[t] = 1;
                        auto w = n.act(delta, d0, alpha, e);
                        for (int r = 0; r < n.dim(d0 + delta); ++r)
                            if (w[r] != 0)
                                d.add_to(static_cast<int>(toff + r), static_cast<int>(soff + t),
                                         w[r]);
                    }
                }
            }
        }
        (void)prev;
    }
    return d;
}

} // namespace

int ext_free(ModulePtr v, ModulePtr n, int i, HomGrading grading)
{
    if (i < 0)
        return 0;
    if (!n || !v)
        throw ValidationError("ext needs both modules");
    if (v->algebra() != n->algebra())
        throw ValidationError("ext needs modules over the same algebra");
    FreeResolutionWindow res(v, i + 1);
    const GradedModule& N = *n;

    HomLayer hi = hom_layer(res, i, N, grading);
    SparseMatrix din = i >= 1 ? hom_differential(res, i, N, grading)
                              : SparseMatrix(static_cast<int>(hi.dim), 0);
    SparseMatrix dout = hom_differential(res, i + 1, N, grading);
    return cohomology_dim(din, dout);
}

std::map<int, std::map<int, int>> betti_numbers(ModulePtr v, int length)
{
    FreeResolutionWindow res(std::move(v), length);
    std::map<int, std::map<int, int>> b;
    for (int l = 0; l <= res.length(); ++l) {
        std::map<int, int> row;
        for (int d : res.gen_degrees(l))
            ++row[d];
        b[l] = std::move(row);
    }
    return b;
}

} // namespace qalg
