#include <qalg/bar.hpp>

#include <qalg/errors.hpp>
#include <qalg/solve.hpp>

#include <algorithm>

namespace qalg {

std::vector<int> positive_degrees(const GradedAlgebra& a)
{
    std::vector<int> degs;
    for (int i = a.unital() ? 1 : 0; i <= a.max_degree(); ++i)
        if (a.dim(i) > 0)
            degs.push_back(i);
    return degs;
}

int TupleSpace::find_block(const std::vector<int>& comp, int j) const
{
    auto it = index.find({comp, j});
    return it == index.end() ? -1 : it->second;
}

std::vector<int> TupleSpace::decode(int block, long flat) const
{
    const TupleBlock& b = blocks[block];
    std::vector<int> idx(b.radix.size());
    for (int s = static_cast<int>(b.radix.size()) - 1; s >= 0; --s) {
        idx[s] = static_cast<int>(flat % b.radix[s]);
        flat /= b.radix[s];
    }
    return idx;
}

long TupleSpace::encode(int block, const std::vector<int>& idx) const
{
    const TupleBlock& b = blocks[block];
    long flat = 0;
    for (size_t s = 0; s < b.radix.size(); ++s)
        flat = flat * b.radix[s] + idx[s];
    return flat;
}

TupleSpace tuple_space(const GradedModule& v, int arity)
{
    const GradedAlgebra& a = *v.algebra();
    std::vector<int> degs = positive_degrees(a);
    TupleSpace t;
    t.arity = arity;

    std::vector<int> comp(arity, 0);
    // Enumerate compositions in lexicographic order over the degree list.
    auto emit = [&](auto&& self, int slot) -> void {
        if (slot == arity) {
            long adim = 1;
            std::vector<int> radix;
            for (int d : comp) {
                adim *= a.dim(d);
                radix.push_back(a.dim(d));
            }
            for (int j = v.window_low(); j <= v.window_high(); ++j) {
                if (v.dim(j) == 0 || adim == 0)
                    continue;
                TupleBlock b;
                b.comp = comp;
                b.j = j;
                b.tot = j;
                for (int d : comp)
                    b.tot += d;
                b.radix = radix;
                b.radix.push_back(v.dim(j));
                b.dim = adim * v.dim(j);
                b.offset = t.dim;
                t.index[{b.comp, b.j}] = static_cast<int>(t.blocks.size());
                t.dim += b.dim;
                t.blocks.push_back(std::move(b));
            }
            return;
        }
        for (int d : degs) {
            comp[slot] = d;
            self(self, slot + 1);
        }
    };
    emit(emit, 0);
    return t;
}

HomSpace hom_space(const TupleSpace& t, const GradedModule& n)
{
    HomSpace h;
    h.source = t;
    for (const TupleBlock& b : t.blocks) {
        h.offset.push_back(h.dim);
        int td = n.dim(b.tot);
        h.target_dim.push_back(td);
        h.dim += b.dim * td;
    }
    return h;
}

BarBuilder::BarBuilder(ModulePtr v, ModulePtr n) : v_(std::move(v)), n_(std::move(n))
{
    if (!v_ || !n_)
        throw ValidationError("bar complex needs both modules");
    if (v_->algebra() != n_->algebra())
        throw ValidationError("bar complex needs modules over the same algebra");
}

HomSpace BarBuilder::term(int arity) const
{
    if (arity < 0) {
        HomSpace empty;
        empty.source.arity = arity;
        return empty;
    }
    return hom_space(tuple_space(*v_, arity), *n_);
}

long BarBuilder::term_dim(int arity) const
{
    return term(arity).dim;
}

std::optional<int> BarBuilder::arity_bound() const
{
    std::vector<int> degs = positive_degrees(*v_->algebra());
    if (degs.empty())
        return 0;
    if (degs.front() == 0)
        return std::nullopt;
    int bound = n_->window_high() - v_->window_low();
    return std::max(0, bound / degs.front());
}

SparseMatrix BarBuilder::differential(int arity) const
{
    if (arity < 0)
        return SparseMatrix(static_cast<int>(term_dim(0)), 0);
    const GradedAlgebra& A = *v_->algebra();
    const GradedModule& V = *v_;
    const GradedModule& N = *n_;
    int n = arity;

    HomSpace src = term(n);
    HomSpace dst = term(n + 1);
    SparseMatrix d(static_cast<int>(dst.dim), static_cast<int>(src.dim));

    const TupleSpace& tsrc = src.source;
    const TupleSpace& tdst = dst.source;

    for (size_t bi = 0; bi < tdst.blocks.size(); ++bi) {
        const TupleBlock& B = tdst.blocks[bi];
        int tn = dst.target_dim[bi];
        if (tn == 0)
            continue;
        for (long u = 0; u < B.dim; ++u) {
            std::vector<int> idx = tdst.decode(static_cast<int>(bi), u);
            long row_base = dst.offset[bi] + u * tn;

            // (a_1 . phi)(a_2 .. a_{n+1}, v)
            {
                std::vector<int> comp2(B.comp.begin() + 1, B.comp.end());
                int sb = tsrc.find_block(comp2, B.j);
                if (sb >= 0 && src.target_dim[sb] > 0) {
                    int tot2 = tsrc.blocks[sb].tot;
                    std::vector<int> sidx(idx.begin() + 1, idx.end());
                    long s = tsrc.encode(sb, sidx);
                    int tn2 = src.target_dim[sb];
                    for (int t = 0; t < tn2; ++t) {
                        std::vector<Rational> e(tn2, Rational(0));
                        e[t] = 1;
                        auto w = N.act_basis(B.comp[0], idx[0], tot2, e);
                        long col = src.offset[sb] + s * tn2 + t;
                        for (int r = 0; r < tn; ++r)
                            if (w[r] != 0)
                                d.add_to(static_cast<int>(row_base + r), static_cast<int>(col),
                                         w[r]);
                    }
                }
            }

            // (-1)^i phi(.., a_i a_{i+1}, ..) for i = 1..n
            for (int i = 1; i <= n; ++i) {
                int di = B.comp[i - 1], dj = B.comp[i];
                std::vector<int> comp2;
                for (int s2 = 0; s2 < n + 1; ++s2) {
                    if (s2 == i - 1)
                        comp2.push_back(di + dj);
                    else if (s2 != i)
                        comp2.push_back(B.comp[s2]);
                }
                int sb = tsrc.find_block(comp2, B.j);
                if (sb < 0 || src.target_dim[sb] == 0)
                    continue;
                const SparseMatrix& mult = A.mult(di, dj);
                int colix = idx[i - 1] * A.dim(dj) + idx[i];
                Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
                int tn2 = src.target_dim[sb];
                for (int z = 0; z < mult.rows(); ++z) {
                    const Rational& cz = mult.at(z, colix);
                    if (cz == 0)
                        continue;
                    std::vector<int> sidx;
                    for (int s2 = 0; s2 < n + 2; ++s2) {
                        if (s2 == i - 1)
                            sidx.push_back(z);
                        else if (s2 != i)
                            sidx.push_back(idx[s2]);
                    }
                    long s = tsrc.encode(sb, sidx);
                    for (int t = 0; t < tn; ++t)
                        d.add_to(static_cast<int>(row_base + t),
                                 static_cast<int>(src.offset[sb] + s * tn2 + t), sign * cz);
                }
            }

            // (-1)^{n+1} phi(a_1 .. a_n, a_{n+1} v)
            {
                int ilast = B.comp[n];
                int j2 = B.j + ilast;
                if (V.in_window(j2) && V.dim(j2) > 0) {
                    std::vector<int> comp2(B.comp.begin(), B.comp.end() - 1);
                    int sb = tsrc.find_block(comp2, j2);
                    if (sb >= 0 && src.target_dim[sb] > 0) {
                        std::vector<Rational> ev(V.dim(B.j), Rational(0));
                        ev[idx[n + 1]] = 1;
                        auto w = V.act_basis(ilast, idx[n], B.j, ev);
                        Rational sign = (n % 2 == 0) ? Rational(-1) : Rational(1);
                        int tn2 = src.target_dim[sb];
                        for (int z = 0; z < V.dim(j2); ++z) {
                            if (w[z] == 0)
                                continue;
                            std::vector<int> sidx(idx.begin(), idx.end() - 2);
                            sidx.push_back(z);
                            long s = tsrc.encode(sb, sidx);
                            for (int t = 0; t < tn; ++t)
                                d.add_to(static_cast<int>(row_base + t),
                                         static_cast<int>(src.offset[sb] + s * tn2 + t),
                                         sign * w[z]);
                        }
                    }
                }
            }
        }
    }
    return d;
}

CochainComplex bar_hom_complex(ModulePtr v, ModulePtr n, int n_max)
{
    BarBuilder b(std::move(v), std::move(n));
    int top = n_max;
    if (top < 0) {
        auto bound = b.arity_bound();
        if (!bound)
            throw CapReached("bar complex over a degree-0 positive part needs an arity cap");
        top = *bound;
    }
    std::vector<int> dims;
    std::vector<SparseMatrix> diffs;
    for (int i = 0; i <= top; ++i)
        dims.push_back(static_cast<int>(b.term_dim(i)));
    for (int i = 0; i + 1 <= top; ++i)
        diffs.push_back(b.differential(i));
    return CochainComplex(0, std::move(dims), std::move(diffs));
}

int ext_bar(ModulePtr v, ModulePtr n, int i)
{
    if (i < 0)
        return 0;
    BarBuilder b(std::move(v), std::move(n));
    SparseMatrix din = b.differential(i - 1);
    SparseMatrix dout = b.differential(i);
    return cohomology_dim(din, dout);
}

SparseMatrix ext_bar_representatives(ModulePtr v, ModulePtr n, int i)
{
    if (i < 0)
        return SparseMatrix(0, 0);
    BarBuilder b(std::move(v), std::move(n));
    SparseMatrix din = b.differential(i - 1);
    SparseMatrix dout = b.differential(i);
    if (!(dout * din).is_zero())
        throw CompositionNonzero("bar differential does not square to zero");
    SparseMatrix cocycles = kernel_basis(dout);
    SparseMatrix coboundaries = column_space_basis(din);
    return complement_in_span(coboundaries, cocycles);
}

namespace {

// Basis bookkeeping for P (x) A_+^{(x) n} (x) Q, restricted to one total
// projective degree.
struct ChainBlock {
    int jp = 0;
    std::vector<int> comp;
    int jq = 0;
    std::vector<int> radix;
    long dim = 0;
    long offset = 0;
};

struct ChainSpace {
    std::vector<ChainBlock> blocks;
    long dim = 0;
    std::map<std::tuple<int, std::vector<int>, int>, int> index;

    int find(int jp, const std::vector<int>& comp, int jq) const
    {
        auto it = index.find({jp, comp, jq});
        return it == index.end() ? -1 : it->second;
    }
    std::vector<int> decode(int block, long flat) const
    {
        const ChainBlock& b = blocks[block];
        std::vector<int> idx(b.radix.size());
        for (int s = static_cast<int>(b.radix.size()) - 1; s >= 0; --s) {
            idx[s] = static_cast<int>(flat % b.radix[s]);
            flat /= b.radix[s];
        }
        return idx;
    }
    long encode(int block, const std::vector<int>& idx) const
    {
        const ChainBlock& b = blocks[block];
        long flat = 0;
        for (size_t s = 0; s < b.radix.size(); ++s)
            flat = flat * b.radix[s] + idx[s];
        return flat;
    }
};

ChainSpace chain_space(const GradedModule& p, const GradedModule& q, int arity, int degree)
{
    const GradedAlgebra& a = *p.algebra();
    std::vector<int> degs = positive_degrees(a);
    ChainSpace t;
    std::vector<int> comp(arity, 0);
    auto emit = [&](auto&& self, int slot, int used) -> void {
        if (slot == arity) {
            for (int jp = p.window_low(); jp <= p.window_high(); ++jp) {
                if (p.dim(jp) == 0)
                    continue;
                int jq = degree - used - jp;
                if (!q.in_window(jq) || q.dim(jq) == 0)
                    continue;
                ChainBlock b;
                b.jp = jp;
                b.comp = comp;
                b.jq = jq;
                b.radix.push_back(p.dim(jp));
                long dim = p.dim(jp);
                for (int d : comp) {
                    b.radix.push_back(a.dim(d));
                    dim *= a.dim(d);
                }
                b.radix.push_back(q.dim(jq));
                dim *= q.dim(jq);
                b.dim = dim;
                b.offset = t.dim;
                t.index[{b.jp, b.comp, b.jq}] = static_cast<int>(t.blocks.size());
                t.dim += dim;
                t.blocks.push_back(std::move(b));
            }
            return;
        }
        for (int d : degs) {
            if (used + d > degree - p.window_low() - q.window_low() && d > 0)
                break;
            comp[slot] = d;
            self(self, slot + 1, used + d);
        }
    };
    emit(emit, 0, 0);
    return t;
}

// b = sum_{k=0}^{n} (-1)^k d_k : T_n -> T_{n-1} in a fixed total degree.
SparseMatrix chain_differential(const GradedModule& P, const GradedModule& Q, int arity,
                                int degree, const ChainSpace& src, const ChainSpace& dst)
{
    const GradedAlgebra& A = *P.algebra();
    int n = arity;
    SparseMatrix d(static_cast<int>(dst.dim), static_cast<int>(src.dim));
    if (n < 1)
        return d;
    (void)degree;

    for (size_t bi = 0; bi < src.blocks.size(); ++bi) {
        const ChainBlock& B = src.blocks[bi];
        for (long u = 0; u < B.dim; ++u) {
            std::vector<int> idx = src.decode(static_cast<int>(bi), u);
            long col = B.offset + u;

            // d_0: (a_1 p) (x) a_2 .. (x) q
            {
                int jp2 = B.jp + B.comp[0];
                if (P.in_window(jp2) && P.dim(jp2) > 0) {
                    std::vector<int> comp2(B.comp.begin() + 1, B.comp.end());
                    int tb = dst.find(jp2, comp2, B.jq);
                    if (tb >= 0) {
                        std::vector<Rational> ep(P.dim(B.jp), Rational(0));
                        ep[idx[0]] = 1;
                        auto w = P.act_basis(B.comp[0], idx[1], B.jp, ep);
                        for (int z = 0; z < P.dim(jp2); ++z) {
                            if (w[z] == 0)
                                continue;
                            std::vector<int> tidx;
                            tidx.push_back(z);
                            for (int s = 2; s < n + 2; ++s)
                                tidx.push_back(idx[s]);
                            long r = dst.blocks[tb].offset + dst.encode(tb, tidx);
                            d.add_to(static_cast<int>(r), static_cast<int>(col), w[z]);
                        }
                    }
                }
            }

            // d_k: merge a_k a_{k+1}, k = 1..n-1, sign (-1)^k
            for (int k = 1; k <= n - 1; ++k) {
                int di = B.comp[k - 1], dj = B.comp[k];
                std::vector<int> comp2;
                for (int s = 0; s < n; ++s) {
                    if (s == k - 1)
                        comp2.push_back(di + dj);
                    else if (s != k)
                        comp2.push_back(B.comp[s]);
                }
                int tb = dst.find(B.jp, comp2, B.jq);
                if (tb < 0)
                    continue;
                const SparseMatrix& mult = A.mult(di, dj);
                int colix = idx[k] * A.dim(dj) + idx[k + 1];
                Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
                for (int z = 0; z < mult.rows(); ++z) {
                    const Rational& cz = mult.at(z, colix);
                    if (cz == 0)
                        continue;
                    std::vector<int> tidx;
                    tidx.push_back(idx[0]);
                    for (int s = 1; s < n + 1; ++s) {
                        if (s == k)
                            tidx.push_back(z);
                        else if (s != k + 1)
                            tidx.push_back(idx[s]);
                    }
                    tidx.push_back(idx[n + 1]);
                    long r = dst.blocks[tb].offset + dst.encode(tb, tidx);
                    d.add_to(static_cast<int>(r), static_cast<int>(col), sign * cz);
                }
            }

            // d_n: p (x) .. (x) (a_n q), sign (-1)^n
            {
                int jq2 = B.jq + B.comp[n - 1];
                if (Q.in_window(jq2) && Q.dim(jq2) > 0) {
                    std::vector<int> comp2(B.comp.begin(), B.comp.end() - 1);
                    int tb = dst.find(B.jp, comp2, jq2);
                    if (tb >= 0) {
                        std::vector<Rational> eq(Q.dim(B.jq), Rational(0));
                        eq[idx[n + 1]] = 1;
                        auto w = Q.act_basis(B.comp[n - 1], idx[n], B.jq, eq);
                        Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
                        for (int z = 0; z < Q.dim(jq2); ++z) {
                            if (w[z] == 0)
                                continue;
                            std::vector<int> tidx(idx.begin(), idx.end() - 2);
                            tidx.push_back(z);
                            long r = dst.blocks[tb].offset + dst.encode(tb, tidx);
                            d.add_to(static_cast<int>(r), static_cast<int>(col), sign * w[z]);
                        }
                    }
                }
            }
        }
    }
    return d;
}

} // namespace

std::map<int, int> tor_bar(ModulePtr p, ModulePtr q, int i)
{
    if (!p || !q)
        throw ValidationError("tor needs both modules");
    if (p->algebra() != q->algebra())
        throw ValidationError("tor needs modules over the same algebra");
    std::map<int, int> out;
    if (i < 0)
        return out;
    const GradedModule& P = *p;
    const GradedModule& Q = *q;

    // Degrees where T_i can be nonzero.
    int lo = P.window_low() + Q.window_low();
    int hi = P.window_high() + Q.window_high();
    for (int d = lo; d <= hi; ++d) {
        ChainSpace ti = chain_space(P, Q, i, d);
        if (ti.dim == 0)
            continue;
        ChainSpace tip = chain_space(P, Q, i + 1, d);
        ChainSpace tim = i >= 1 ? chain_space(P, Q, i - 1, d) : ChainSpace{};
        SparseMatrix d_in = chain_differential(P, Q, i + 1, d, tip, ti);
        SparseMatrix d_out = i >= 1 ? chain_differential(P, Q, i, d, ti, tim)
                                    : SparseMatrix(0, static_cast<int>(ti.dim));
        int h = cohomology_dim(d_in, d_out);
        if (h != 0)
            out[d] = h;
    }
    return out;
}

} // namespace qalg
