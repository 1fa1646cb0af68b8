#include <qalg/mhomotopy.hpp>

#include <qalg/errors.hpp>
#include <qalg/solve.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace qalg {

namespace {

void tp_trim(TPoly& a)
{
    while (!a.empty() && a.back().empty())
        a.pop_back();
}

TPoly tp_add(const TPoly& a, const TPoly& b)
{
    TPoly out(std::max(a.size(), b.size()));
    for (size_t k = 0; k < out.size(); ++k) {
        if (k < a.size())
            out[k] = FreeDgaPresentation::add(out[k], a[k]);
        if (k < b.size())
            out[k] = FreeDgaPresentation::add(out[k], b[k]);
    }
    tp_trim(out);
    return out;
}

TPoly tp_scale(const TPoly& a, const Rational& c)
{
    TPoly out;
    for (const DgaPoly& p : a)
        out.push_back(FreeDgaPresentation::scale(p, c));
    tp_trim(out);
    return out;
}

TPoly tp_mul(const FreeDgaPresentation& c, const TPoly& a, const TPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    TPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = FreeDgaPresentation::add(out[i + j], c.mul(a[i], b[j]));
    tp_trim(out);
    return out;
}

TPoly tp_d(const FreeDgaPresentation& c, const TPoly& a)
{
    TPoly out;
    for (const DgaPoly& p : a)
        out.push_back(c.d(p));
    tp_trim(out);
    return out;
}

TPoly tp_deriv(const TPoly& a)
{
    TPoly out;
    for (size_t k = 1; k < a.size(); ++k)
        out.push_back(FreeDgaPresentation::scale(a[k], Rational(static_cast<long>(k))));
    tp_trim(out);
    return out;
}

DgaPoly tp_eval(const TPoly& a, const Rational& t)
{
    DgaPoly out;
    Rational power(1);
    for (const DgaPoly& p : a) {
        out = FreeDgaPresentation::add(out, FreeDgaPresentation::scale(p, power));
        power *= t;
    }
    return out;
}

TPoly tp_one()
{
    return {FreeDgaPresentation::one()};
}

// f_t extended multiplicatively to a polynomial in the generators of B.
TPoly apply_f(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
              const std::vector<TPoly>& f, const DgaPoly& poly)
{
    (void)b;
    TPoly out;
    for (const auto& [m, coef] : poly) {
        TPoly term = tp_one();
        for (const auto& [g, e] : m)
            for (int k = 0; k < e; ++k)
                term = tp_mul(c, term, f.at(g));
        out = tp_add(out, tp_scale(term, coef));
    }
    return out;
}

// s_t extended as an f_t-derivation: on a product x_1 .. x_m it is
// sum_i (-1)^{deg x_1 + .. + deg x_{i-1}} f(x_1..x_{i-1}) s(x_i) f(x_{i+1}..x_m).
TPoly apply_s(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
              const std::vector<TPoly>& f, const std::vector<TPoly>& s, const DgaPoly& poly)
{
    TPoly out;
    for (const auto& [m, coef] : poly) {
        std::vector<int> factors;
        for (const auto& [g, e] : m)
            for (int k = 0; k < e; ++k)
                factors.push_back(g);
        int prefix_parity = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            TPoly term = tp_one();
            for (size_t j = 0; j < i; ++j)
                term = tp_mul(c, term, f.at(factors[j]));
            term = tp_mul(c, term, s.at(factors[i]));
            for (size_t j = i + 1; j < factors.size(); ++j)
                term = tp_mul(c, term, f.at(factors[j]));
            Rational sign = (prefix_parity % 2 == 0) ? Rational(1) : Rational(-1);
            out = tp_add(out, tp_scale(term, sign * coef));
            prefix_parity += b.generator(factors[i]).degree.cohomological;
        }
    }
    return out;
}

// Solve d X = r in C, with X drawn from the monomial basis of the given
// bidegree up to the exponent cap.
std::optional<DgaPoly> solve_d_preimage(const FreeDgaPresentation& c, const DgaPoly& r,
                                        BiDegree source_degree, int cap)
{
    if (r.empty())
        return DgaPoly{};
    std::vector<DgaMonomial> basis = c.monomial_basis(source_degree, cap);
    std::vector<DgaPoly> images;
    std::map<DgaMonomial, int> row_of;
    auto row = [&](const DgaMonomial& m) {
        auto [it, fresh] = row_of.insert({m, static_cast<int>(row_of.size())});
        (void)fresh;
        return it->second;
    };
    for (const DgaMonomial& m : basis) {
        images.push_back(c.d(DgaPoly{{m, Rational(1)}}));
        for (const auto& [mm, v] : images.back())
            row(mm);
    }
    for (const auto& [mm, v] : r)
        row(mm);

    SparseMatrix a(static_cast<int>(row_of.size()), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (const auto& [mm, v] : images[j])
            a.set(row(mm), static_cast<int>(j), v);
    std::vector<Rational> rhs(row_of.size(), Rational(0));
    for (const auto& [mm, v] : r)
        rhs[row(mm)] = v;

    std::optional<std::vector<Rational>> x = solve(a, rhs);
    if (!x)
        return std::nullopt;
    DgaPoly out;
    for (size_t j = 0; j < basis.size(); ++j)
        if ((*x)[j] != 0)
            out[basis[j]] = (*x)[j];
    return out;
}

} // namespace

void validate_dga_morphism(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                           const DgaMorphism& f)
{
    if (static_cast<int>(f.images.size()) != b.num_generators())
        throw ValidationError("morphism must give an image for every generator");
    std::vector<TPoly> fmap;
    for (const DgaPoly& img : f.images)
        fmap.push_back(img.empty() ? TPoly{} : TPoly{img});
    for (int g = 0; g < b.num_generators(); ++g) {
        BiDegree got;
        if (!c.homogeneous(f.images[g], &got))
            throw InconsistentGrading("image of " + b.generator(g).name +
                                      " is not homogeneous");
        if (!f.images[g].empty() && !(got == b.generator(g).degree))
            throw InconsistentGrading("image of " + b.generator(g).name +
                                      " has the wrong degree");
    }
    for (int g = 0; g < b.num_generators(); ++g) {
        TPoly lhs = tp_d(c, fmap[g]);
        TPoly rhs = apply_f(b, c, fmap, b.differential_of(g));
        if (!(tp_add(lhs, tp_scale(rhs, Rational(-1))).empty()))
            throw ValidationError("d o f != f o d on generator " + b.generator(g).name);
    }
}

MHomotopy m_homotopy_construct(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                               const DgaMorphism& f0, const DgaMorphism& f1,
                               int exponent_cap)
{
    for (int g = 0; g < b.num_generators(); ++g)
        if (b.generator(g).degree.cohomological > 0)
            throw ValidationError(
                "homotopy construction needs generators in cohomological degrees <= 0");
    validate_dga_morphism(b, c, f0);
    validate_dga_morphism(b, c, f1);

    std::vector<int> order(b.num_generators());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return b.generator(x).degree.cohomological > b.generator(y).degree.cohomological;
    });

    MHomotopy h;
    h.f.assign(b.num_generators(), {});
    h.s.assign(b.num_generators(), {});

    for (int g : order) {
        BiDegree deg = b.generator(g).degree;
        const DgaPoly& dg = b.differential_of(g);
        // All generators in dg sit in strictly higher cohomological degree,
        // so f_t and s_t are already available there.
        TPoly rhs2 = apply_s(b, c, h.f, h.s, dg);

        // Ansatz: s_t(g) = X, constant in t. Then the coefficients of
        // f_t(g) are a_0 = f0(g), a_{k+1} = (rhs2_k + [k=0] dX) / (k+1),
        // and the t=1 endpoint pins down
        //   d X = f1(g) - f0(g) - sum_k rhs2_k / (k+1).
        DgaPoly target = FreeDgaPresentation::add(
            f1.images[g], FreeDgaPresentation::scale(f0.images[g], Rational(-1)));
        for (size_t k = 0; k < rhs2.size(); ++k)
            target = FreeDgaPresentation::add(
                target, FreeDgaPresentation::scale(
                            rhs2[k], Rational(-1) / Rational(static_cast<long>(k + 1))));

        if (!c.d(target).empty())
            throw AcyclicityFailure("required d-preimage target is not closed at generator " +
                                    b.generator(g).name);
        std::optional<DgaPoly> x =
            solve_d_preimage(c, target, {deg.projective, deg.cohomological - 1}, exponent_cap);
        if (!x) {
            if (deg.cohomological == 0)
                throw NotHomotopic("the maps disagree in H^0 at generator " +
                                   b.generator(g).name);
            throw AcyclicityFailure("no d-preimage within the truncation at generator " +
                                    b.generator(g).name);
        }

        TPoly ft;
        ft.push_back(f0.images[g]);
        DgaPoly dx = c.d(*x);
        size_t top = rhs2.size();
        for (size_t k = 0; k < std::max<size_t>(top, 1); ++k) {
            DgaPoly ak1 = (k < rhs2.size()) ? rhs2[k] : DgaPoly{};
            if (k == 0)
                ak1 = FreeDgaPresentation::add(ak1, dx);
            ft.push_back(FreeDgaPresentation::scale(
                ak1, Rational(1) / Rational(static_cast<long>(k + 1))));
        }
        tp_trim(ft);
        h.f[g] = std::move(ft);
        if (!x->empty())
            h.s[g] = TPoly{*x};
    }

    verify_m_homotopy(b, c, f0, f1, h);
    return h;
}

void verify_m_homotopy(const FreeDgaPresentation& b, const FreeDgaPresentation& c,
                       const DgaMorphism& f0, const DgaMorphism& f1, const MHomotopy& h)
{
    for (int g = 0; g < b.num_generators(); ++g) {
        const std::string& name = b.generator(g).name;
        const TPoly& f = h.f.at(g);

        DgaPoly at0 = tp_eval(f, Rational(0));
        DgaPoly at1 = tp_eval(f, Rational(1));
        if (!(at0 == f0.images[g]))
            throw SignError("homotopy endpoint t=0 mismatch at " + name);
        if (!(at1 == f1.images[g]))
            throw SignError("homotopy endpoint t=1 mismatch at " + name);

        // d o f_t = f_t o d, coefficientwise in t
        TPoly dgmap = tp_add(tp_d(c, f),
                             tp_scale(apply_f(b, c, h.f, b.differential_of(g)), Rational(-1)));
        if (!dgmap.empty())
            throw SignError("f_t is not a dg map at " + name);

        // f_t' = d o s_t + s_t o d
        TPoly want = tp_add(tp_d(c, h.s.at(g)), apply_s(b, c, h.f, h.s, b.differential_of(g)));
        TPoly diff = tp_add(tp_deriv(f), tp_scale(want, Rational(-1)));
        if (!diff.empty())
            throw SignError("f_t' != d s_t + s_t d at " + name);
    }
}

DgaMorphism evaluate_homotopy(const MHomotopy& h, const Rational& t)
{
    DgaMorphism out;
    for (const TPoly& f : h.f)
        out.images.push_back(tp_eval(f, t));
    return out;
}

} // namespace qalg
