#include <qalg/ract.hpp>

#include <qalg/errors.hpp>

namespace qalg {

namespace {

int block_of_flat(const TupleSpace& t, long flat)
{
    for (size_t b = 0; b < t.blocks.size(); ++b)
        if (flat < t.blocks[b].offset + t.blocks[b].dim)
            return static_cast<int>(b);
    throw ValidationError("tuple index out of range");
}

} // namespace

RactDga build_ract_dga(ModulePtr space, int arity_max)
{
    if (arity_max < 1)
        throw ValidationError("build_ract_dga: arity_max must be >= 1");
    RactDga r;
    r.space = space;
    r.arity_max = arity_max;
    const GradedModule& V = *space;

    std::vector<TupleSpace> tsp;
    std::vector<HomSpace> hsp;
    for (int n = 1; n <= arity_max; ++n) {
        tsp.push_back(tuple_space(V, n));
        hsp.push_back(hom_space(tsp.back(), V));
    }

    // One generator per coordinate of mu_n, cohomological degree 1 - n.
    r.gen_of.resize(arity_max);
    for (int n = 1; n <= arity_max; ++n) {
        const HomSpace& h = hsp[n - 1];
        r.gen_of[n - 1].assign(h.dim, -1);
        for (size_t b = 0; b < h.source.blocks.size(); ++b) {
            const TupleBlock& blk = h.source.blocks[b];
            for (long s = 0; s < blk.dim; ++s)
                for (int t = 0; t < h.target_dim[b]; ++t) {
                    long flat = h.offset[b] + s * h.target_dim[b] + t;
                    long tgt = flat_offset(V, blk.tot) + t;
                    std::string name = "mu" + std::to_string(n) + "_" +
                                       std::to_string(blk.offset + s) + "_" +
                                       std::to_string(tgt);
                    r.gen_of[n - 1][flat] =
                        r.dga.add_generator(name, BiDegree{0, 1 - n});
                }
        }
    }

    // d(mu_N coordinate) = the matching coordinate of the arity-N residual:
    // signed merges hitting mu_{N-1} (linear) plus signed compositions
    // mu_p o mu_q, p + q = N (quadratic).
    for (int N = 2; N <= arity_max; ++N) {
        const TupleSpace& T = tsp[N - 1];
        const HomSpace& h = hsp[N - 1];
        std::vector<SparseMatrix> merge_t; // transposed, for column access
        for (int i = 1; i <= N - 1; ++i)
            merge_t.push_back(merge_operator(V, N, i).transpose());

        for (size_t b = 0; b < T.blocks.size(); ++b) {
            const TupleBlock& blk = T.blocks[b];
            for (long s = 0; s < blk.dim; ++s) {
                long u = blk.offset + s;
                std::vector<int> idx = T.decode(static_cast<int>(b), s);

                for (int t = 0; t < h.target_dim[b]; ++t) {
                    DgaPoly dg;

                    // (-1)^{i+1} mu_{N-1}(.., a_i a_{i+1}, ..)
                    for (int i = 1; i <= N - 1; ++i) {
                        int sign = (i % 2 == 1) ? 1 : -1;
                        for (const auto& [up, c] : merge_t[i - 1].row(u)) {
                            int bp = block_of_flat(tsp[N - 2], up);
                            const TupleBlock& pblk = tsp[N - 2].blocks[bp];
                            long hflat = hsp[N - 2].offset[bp] +
                                         (up - pblk.offset) * hsp[N - 2].target_dim[bp] +
                                         t;
                            DgaPoly term =
                                FreeDgaPresentation::gen_poly(r.generator(N - 1, hflat));
                            dg = FreeDgaPresentation::add(
                                dg, FreeDgaPresentation::scale(term, Rational(sign) * c));
                        }
                    }

                    // (-1)^{N-q} mu_{N-q}(head, mu_q(tail, v))
                    for (int q = 1; q <= N - 1; ++q) {
                        int p = N - q;
                        int sign = (p % 2 == 0) ? 1 : -1;
                        std::vector<int> tail_comp(blk.comp.begin() + p, blk.comp.end());
                        int tail_tot = blk.j;
                        for (int c : tail_comp)
                            tail_tot += c;
                        int wdim = V.dim(tail_tot);
                        if (wdim == 0)
                            continue;

                        std::vector<int> in_idx(idx.begin() + p, idx.end());
                        int b_in = tsp[q - 1].find_block(tail_comp, blk.j);
                        long s_in = tsp[q - 1].encode(b_in, in_idx);

                        std::vector<int> head_comp(blk.comp.begin(), blk.comp.begin() + p);
                        int b_out = tsp[p - 1].find_block(head_comp, tail_tot);
                        std::vector<int> out_idx(idx.begin(), idx.begin() + p);
                        out_idx.push_back(0); // w slot, set below

                        for (int w = 0; w < wdim; ++w) {
                            long in_flat = hsp[q - 1].offset[b_in] +
                                           s_in * hsp[q - 1].target_dim[b_in] + w;
                            out_idx.back() = w;
                            long s_out = tsp[p - 1].encode(b_out, out_idx);
                            long out_flat = hsp[p - 1].offset[b_out] +
                                            s_out * hsp[p - 1].target_dim[b_out] + t;
                            DgaPoly term = r.dga.mul(
                                FreeDgaPresentation::gen_poly(r.generator(p, out_flat)),
                                FreeDgaPresentation::gen_poly(r.generator(q, in_flat)));
                            dg = FreeDgaPresentation::add(
                                dg, FreeDgaPresentation::scale(term, Rational(sign)));
                        }
                    }

                    long hflat = h.offset[b] + s * h.target_dim[b] + t;
                    r.dga.set_differential(r.generator(N, hflat), std::move(dg));
                }
            }
        }
    }

    r.dga.verify_d2();
    return r;
}

std::vector<DgaPoly> pi0_ideal(const RactDga& r)
{
    std::vector<DgaPoly> out;
    for (int g = 0; g < r.dga.num_generators(); ++g) {
        if (r.dga.generator(g).degree.cohomological != -1)
            continue;
        DgaPoly kept;
        for (const auto& [m, c] : r.dga.differential_of(g)) {
            bool degree_zero = true;
            for (const auto& [gi, e] : m) {
                (void)e;
                if (r.dga.generator(gi).degree.cohomological != 0)
                    degree_zero = false;
            }
            if (degree_zero)
                kept[m] = c;
        }
        if (!kept.empty())
            out.push_back(std::move(kept));
    }
    return out;
}

} // namespace qalg
