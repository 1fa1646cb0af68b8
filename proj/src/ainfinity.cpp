#include <qalg/ainfinity.hpp>

#include <qalg/errors.hpp>

#include <algorithm>

namespace qalg {

long flat_dim(const GradedModule& m)
{
    long n = 0;
    for (int d = m.window_low(); d <= m.window_high(); ++d)
        n += m.dim(d);
    return n;
}

long flat_offset(const GradedModule& m, int d)
{
    long off = 0;
    for (int e = m.window_low(); e < d; ++e)
        off += m.dim(e);
    return off;
}

namespace {

int degree_of_flat(const GradedModule& m, long flat)
{
    for (int d = m.window_low(); d <= m.window_high(); ++d) {
        if (flat < m.dim(d))
            return d;
        flat -= m.dim(d);
    }
    throw ValidationError("flat index out of range");
}

} // namespace

void AInfinityModule::validate_shapes() const
{
    if (!algebra || !space)
        throw ValidationError("A-infinity module needs an algebra and a space");
    if (space->algebra() != algebra)
        throw ValidationError("space must live over the declared algebra");
    long vd = flat_dim(*space);
    for (int n = 1; n <= arity(); ++n) {
        const SparseMatrix& m = mu[n - 1];
        TupleSpace t = tuple_space(*space, n);
        if (m.rows() != vd || m.cols() != t.dim)
            throw ValidationError("mu_" + std::to_string(n) + " has the wrong shape");
        // Projective degree 0: block (comp, j) may only hit V_{tot}.
        SparseMatrix mt = m.transpose();
        for (const TupleBlock& b : t.blocks) {
            long lo = flat_offset(*space, b.tot);
            long hi = lo + space->dim(b.tot);
            for (long c = b.offset; c < b.offset + b.dim; ++c)
                for (const auto& [r, val] : mt.row(static_cast<int>(c))) {
                    (void)val;
                    if (r < lo || r >= hi)
                        throw InconsistentGrading("mu_" + std::to_string(n) +
                                                  " is not of projective degree 0");
                }
        }
    }
}

AInfinityModule ainf_from_module(ModulePtr m, int arity)
{
    AInfinityModule s;
    s.algebra = m->algebra();
    s.space = m;
    const GradedModule& V = *m;
    for (int n = 1; n <= arity; ++n) {
        TupleSpace t = tuple_space(V, n);
        SparseMatrix op(static_cast<int>(flat_dim(V)), static_cast<int>(t.dim));
        if (n == 1) {
            for (const TupleBlock& b : t.blocks) {
                if (!V.in_window(b.tot) || V.dim(b.tot) == 0)
                    continue;
                long roff = flat_offset(V, b.tot);
                for (long u = 0; u < b.dim; ++u) {
                    auto idx = t.decode(t.find_block(b.comp, b.j), u);
                    std::vector<Rational> ev(V.dim(b.j), Rational(0));
                    ev[idx[1]] = 1;
                    auto w = V.act_basis(b.comp[0], idx[0], b.j, ev);
                    for (size_t z = 0; z < w.size(); ++z)
                        if (w[z] != 0)
                            op.set(static_cast<int>(roff + z), static_cast<int>(b.offset + u),
                                   w[z]);
                }
            }
        }
        s.mu.push_back(std::move(op));
    }
    return s;
}

SparseMatrix merge_operator(const GradedModule& v, int n, int i)
{
    const GradedAlgebra& A = *v.algebra();
    TupleSpace src = tuple_space(v, n);
    TupleSpace dst = tuple_space(v, n - 1);
    SparseMatrix m(static_cast<int>(dst.dim), static_cast<int>(src.dim));
    for (size_t bi = 0; bi < src.blocks.size(); ++bi) {
        const TupleBlock& B = src.blocks[bi];
        int di = B.comp[i - 1], dj = B.comp[i];
        std::vector<int> comp2;
        for (int s = 0; s < n; ++s) {
            if (s == i - 1)
                comp2.push_back(di + dj);
            else if (s != i)
                comp2.push_back(B.comp[s]);
        }
        int tb = dst.find_block(comp2, B.j);
        if (tb < 0)
            continue;
        const SparseMatrix& mult = A.mult(di, dj);
        for (long u = 0; u < B.dim; ++u) {
            std::vector<int> idx = src.decode(static_cast<int>(bi), u);
            int colix = idx[i - 1] * A.dim(dj) + idx[i];
            for (int z = 0; z < mult.rows(); ++z) {
                const Rational& cz = mult.at(z, colix);
                if (cz == 0)
                    continue;
                std::vector<int> tidx;
                for (int s = 0; s < n + 1; ++s) {
                    if (s == i - 1)
                        tidx.push_back(z);
                    else if (s != i)
                        tidx.push_back(idx[s]);
                }
                long r = dst.blocks[tb].offset + dst.encode(tb, tidx);
                m.add_to(static_cast<int>(r), static_cast<int>(B.offset + u), cz);
            }
        }
    }
    return m;
}

SparseMatrix contract_operator(const AInfinityModule& s, int n, int q)
{
    const GradedModule& V = *s.space;
    TupleSpace src = tuple_space(V, n);
    long out_rows = q == n ? flat_dim(V) : tuple_space(V, n - q).dim;
    SparseMatrix m(static_cast<int>(out_rows), static_cast<int>(src.dim));
    if (q > s.arity() || q < 1 || q > n)
        return m; // missing operations act as zero

    TupleSpace tail_space = tuple_space(V, q);
    TupleSpace dst = q == n ? TupleSpace{} : tuple_space(V, n - q);
    SparseMatrix muT = s.mu[q - 1].transpose();

    for (size_t bi = 0; bi < src.blocks.size(); ++bi) {
        const TupleBlock& B = src.blocks[bi];
        std::vector<int> head(B.comp.begin(), B.comp.end() - q);
        std::vector<int> tail(B.comp.end() - q, B.comp.end());
        int tb = tail_space.find_block(tail, B.j);
        if (tb < 0)
            continue;
        for (long u = 0; u < B.dim; ++u) {
            std::vector<int> idx = src.decode(static_cast<int>(bi), u);
            std::vector<int> tailidx(idx.begin() + (n - q), idx.end());
            long mu_col = tail_space.blocks[tb].offset + tail_space.encode(tb, tailidx);
            for (const auto& [r, val] : muT.row(static_cast<int>(mu_col))) {
                if (q == n) {
                    m.add_to(r, static_cast<int>(B.offset + u), val);
                    continue;
                }
                int d2 = degree_of_flat(V, r);
                int z = static_cast<int>(r - flat_offset(V, d2));
                int ob = dst.find_block(head, d2);
                if (ob < 0)
                    continue;
                std::vector<int> oidx(idx.begin(), idx.begin() + (n - q));
                oidx.push_back(z);
                long row = dst.blocks[ob].offset + dst.encode(ob, oidx);
                m.add_to(static_cast<int>(row), static_cast<int>(B.offset + u), val);
            }
        }
    }
    return m;
}

SparseMatrix ainf_residual(const AInfinityModule& s, int n)
{
    const GradedModule& V = *s.space;
    TupleSpace src = tuple_space(V, n);
    SparseMatrix r(static_cast<int>(flat_dim(V)), static_cast<int>(src.dim));
    // merges: (-1)^{i+1} mu_{n-1}(.., a_i a_{i+1}, ..)
    if (n - 1 >= 1 && n - 1 <= s.arity()) {
        for (int i = 1; i <= n - 1; ++i) {
            SparseMatrix term = s.mu[n - 2] * merge_operator(V, n, i);
            r = (i % 2 == 1) ? r + term : r - term;
        }
    }
    // contractions: (-1)^{n-q} mu_{n-q}(a_1..a_{n-q}, mu_q(tail))
    for (int q = 1; q <= n - 1; ++q) {
        if (n - q > s.arity() || q > s.arity())
            continue;
        SparseMatrix term = s.mu[n - q - 1] * contract_operator(s, n, q);
        r = ((n - q) % 2 == 0) ? r + term : r - term;
    }
    return r;
}

namespace {

std::string residual_witness(const AInfinityModule& s, int n, const SparseMatrix& r)
{
    const GradedModule& V = *s.space;
    TupleSpace src = tuple_space(V, n);
    for (int row = 0; row < r.rows(); ++row)
        for (const auto& [c, val] : r.row(row)) {
            // locate the block of column c
            for (const TupleBlock& b : src.blocks)
                if (c >= b.offset && c < b.offset + b.dim) {
                    std::string comp = "(";
                    for (size_t k = 0; k < b.comp.size(); ++k)
                        comp += (k ? "," : "") + std::to_string(b.comp[k]);
                    comp += ")";
                    return "arity " + std::to_string(n) + ", algebra degrees " + comp +
                           ", V degree " + std::to_string(b.j) + ": residual entry " +
                           to_string(val);
                }
        }
    return "";
}

} // namespace

AInfCheckReport check_ainf_module(const AInfinityModule& s, int max_arity)
{
    s.validate_shapes();
    if (max_arity < 0)
        max_arity = std::max(2, 2 * s.arity());
    AInfCheckReport rep;
    for (int n = 2; n <= max_arity; ++n) {
        SparseMatrix r = ainf_residual(s, n);
        if (!r.is_zero()) {
            rep.ok = false;
            rep.first_failing_arity = n;
            rep.witness = residual_witness(s, n, r);
            rep.residual = std::move(r);
            return rep;
        }
    }
    return rep;
}

std::vector<long> bar_construction_offsets(const AInfinityModule& s, int n_max)
{
    std::vector<long> off;
    long total = 0;
    for (int n = 0; n <= n_max; ++n) {
        off.push_back(total);
        total += n == 0 ? flat_dim(*s.space) : tuple_space(*s.space, n).dim;
    }
    off.push_back(total);
    return off;
}

SparseMatrix bar_construction_differential(const AInfinityModule& s, int n_max)
{
    const GradedModule& V = *s.space;
    std::vector<long> off = bar_construction_offsets(s, n_max);
    long total = off.back();
    SparseMatrix d(static_cast<int>(total), static_cast<int>(total));

    auto place = [&](const SparseMatrix& block, long row0, long col0, int sign) {
        for (int r = 0; r < block.rows(); ++r)
            for (const auto& [c, val] : block.row(r))
                d.add_to(static_cast<int>(row0 + r), static_cast<int>(col0 + c),
                         sign > 0 ? val : Rational(-val));
    };

    for (int n = 1; n <= n_max; ++n) {
        for (int i = 1; i <= n - 1; ++i)
            place(merge_operator(V, n, i), off[n - 1], off[n], (i % 2 == 0) ? 1 : -1);
        for (int q = 1; q <= std::min(n, s.arity()); ++q)
            place(contract_operator(s, n, q), off[n - q], off[n],
                  ((n - q + 1) % 2 == 0) ? 1 : -1);
    }
    return d;
}

AInfCheckReport check_ainf_morphism(const AInfinityModule& v, const AInfinityModule& w,
                                    const AInfinityMorphism& f, int max_arity)
{
    v.validate_shapes();
    w.validate_shapes();
    if (v.algebra != w.algebra)
        throw ValidationError("morphism needs modules over the same algebra");
    if (max_arity < 0)
        max_arity = std::max({2, 2 * v.arity(), 2 * w.arity(),
                              2 * (static_cast<int>(f.f.size()) - 1)});

    const GradedModule& V = *v.space;
    const GradedModule& W = *w.space;
    std::vector<long> voff = bar_construction_offsets(v, max_arity);
    std::vector<long> woff = bar_construction_offsets(w, max_arity);

    // F(a_1..a_n, x) = sum_k (a_1..a_{n-k}) (x) f_k(a_{n-k+1}..a_n, x)
    SparseMatrix F(static_cast<int>(woff.back()), static_cast<int>(voff.back()));
    for (int n = 0; n <= max_arity; ++n) {
        TupleSpace src = n == 0 ? TupleSpace{} : tuple_space(V, n);
        for (int k = 0; k <= std::min(n, static_cast<int>(f.f.size()) - 1); ++k) {
            const SparseMatrix& fk = f.f[k];
            if (fk.is_zero())
                continue;
            SparseMatrix fkT = fk.transpose();
            TupleSpace tail_space = tuple_space(V, k);
            TupleSpace dst = tuple_space(W, n - k);
            auto emit_entry = [&](long col_total, const std::vector<int>& headidx,
                                  const std::vector<int>& headcomp, long mu_col) {
                for (const auto& [r, val] : fkT.row(static_cast<int>(mu_col))) {
                    long row_total;
                    if (n - k == 0) {
                        row_total = woff[0] + r;
                    } else {
                        int d2 = degree_of_flat(W, r);
                        int z = static_cast<int>(r - flat_offset(W, d2));
                        int ob = dst.find_block(headcomp, d2);
                        if (ob < 0)
                            continue;
                        std::vector<int> oidx = headidx;
                        oidx.push_back(z);
                        row_total = woff[n - k] + dst.blocks[ob].offset + dst.encode(ob, oidx);
                    }
                    F.add_to(static_cast<int>(row_total), static_cast<int>(col_total), val);
                }
            };
            if (n == 0) {
                // f_0 : V -> W on flat coordinates
                for (long c = 0; c < flat_dim(V); ++c)
                    emit_entry(voff[0] + c, {}, {}, c);
                continue;
            }
            for (size_t bi = 0; bi < src.blocks.size(); ++bi) {
                const TupleBlock& B = src.blocks[bi];
                std::vector<int> head(B.comp.begin(), B.comp.end() - k);
                std::vector<int> tail(B.comp.end() - k, B.comp.end());
                long mu_col_base = -1;
                int tb = -1;
                if (k == 0) {
                    // tail is just x itself: f_0 applied to the V slot
                    tb = -2;
                } else {
                    tb = tail_space.find_block(tail, B.j);
                    if (tb < 0)
                        continue;
                }
                (void)mu_col_base;
                for (long u = 0; u < B.dim; ++u) {
                    std::vector<int> idx = src.decode(static_cast<int>(bi), u);
                    long mu_col;
                    if (k == 0)
                        mu_col = flat_offset(V, B.j) + idx[n];
                    else {
                        std::vector<int> tailidx(idx.begin() + (n - k), idx.end());
                        mu_col = tail_space.blocks[tb].offset + tail_space.encode(tb, tailidx);
                    }
                    std::vector<int> headidx(idx.begin(), idx.begin() + (n - k));
                    emit_entry(voff[n] + B.offset + u, headidx, head, mu_col);
                }
            }
        }
    }

    SparseMatrix dv = bar_construction_differential(v, max_arity);
    SparseMatrix dw = bar_construction_differential(w, max_arity);
    SparseMatrix e = dw * F - F * dv;

    AInfCheckReport rep;
    if (e.is_zero())
        return rep;
    rep.ok = false;
    // first failing source arity
    long bad_col = -1;
    for (int r = 0; r < e.rows() && bad_col < 0; ++r)
        for (const auto& [c, val] : e.row(r)) {
            (void)val;
            if (bad_col < 0 || c < bad_col)
                bad_col = c;
        }
    for (int n = 0; n <= max_arity; ++n)
        if (bad_col >= voff[n] && bad_col < voff[n + 1])
            rep.first_failing_arity = n;
    rep.residual = std::move(e);
    rep.witness = "morphism identity fails on arity " + std::to_string(rep.first_failing_arity);
    return rep;
}

} // namespace qalg
