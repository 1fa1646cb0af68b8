#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qalg/bar.hpp>
#include <qalg/charts.hpp>
#include <qalg/errors.hpp>
#include <qalg/ingestion.hpp>
#include <qalg/mhomotopy.hpp>
#include <qalg/quot.hpp>
#include <qalg/stabilization.hpp>

#include <random>

using namespace qalg;

namespace {

CoordinateRing poly_ring(int vars, int max_degree)
{
    IdealPresentation ip;
    ip.num_vars = vars;
    ip.max_degree = max_degree;
    return CoordinateRing(ip);
}

int monomial_index(const CoordinateRing& r, int d, const Exponents& e)
{
    const auto& mons = r.monomials(d);
    for (size_t i = 0; i < mons.size(); ++i)
        if (mons[i] == e)
            return static_cast<int>(i);
    return -1;
}

} // namespace

TEST_CASE("submodule test with witness")
{
    CoordinateRing ring = poly_ring(2, 6);
    auto m = std::make_shared<GradedModule>(ring.ring_module(1, 2));

    // V1 = <x>, V2 = <x^2, xy>: a submodule
    SubmodulePoint good = ideal_submodule(ring, std::vector<std::string>{"x0"}, 1, 2);
    CHECK(is_submodule(good).ok);

    // V1 = <x>, V2 = <y^2>: x.x = x^2 escapes
    SubmodulePoint bad;
    bad.ambient = m;
    SparseMatrix b1(m->dim(1), 1), b2(m->dim(2), 1);
    b1.set(monomial_index(ring, 1, {1, 0}), 0, Rational(1)); // x
    b2.set(monomial_index(ring, 2, {0, 2}), 0, Rational(1)); // y^2
    bad.bases = {b1, b2};
    SubmoduleWitness w = is_submodule(bad);
    CHECK_FALSE(w.ok);
    CHECK(w.degree == 1);
    CHECK(w.generator_degree == 1);

    // section residuals vanish exactly on submodules
    for (const SectionValue& sv : section_values(good))
        CHECK(sv.residual.is_zero());
    bool found_nonzero = false;
    for (const SectionValue& sv : section_values(bad))
        if (!sv.residual.is_zero()) {
            found_nonzero = true;
            CHECK(sv.degree == 1);
        }
    CHECK(found_nonzero);
}

TEST_CASE("classical tangent dimensions")
{
    {
        CoordinateRing ring = poly_ring(2, 7);
        SubmodulePoint pt = ideal_submodule(ring, std::vector<std::string>{"x0"}, 1, 6);
        CHECK(tangent_classical(pt).dimension == 1);
        CHECK(tangent_classical(SubmodulePoint::whole(pt.ambient)).dimension == 0);
    }
    {
        CoordinateRing ring = poly_ring(3, 6);
        SubmodulePoint pt =
            ideal_submodule(ring, std::vector<std::string>{"x0", "x1"}, 1, 5);
        CHECK(tangent_classical(pt).dimension == 2);
    }
    {
        CoordinateRing ring = poly_ring(2, 6);
        SubmodulePoint bad;
        bad.ambient = std::make_shared<GradedModule>(ring.ring_module(1, 2));
        SparseMatrix b1(bad.ambient->dim(1), 1), b2(bad.ambient->dim(2), 1);
        b1.set(0, 0, Rational(1));
        b2.set(monomial_index(ring, 2, {0, 2}), 0, Rational(1));
        bad.bases = {b1, b2};
        CHECK_THROWS_AS(tangent_classical(bad), NotASubmodule);
    }
}

TEST_CASE("bottom-degree generation reproduces ideals")
{
    CoordinateRing ring = poly_ring(2, 8);
    for (int p = 2; p <= 3; ++p) {
        auto m = std::make_shared<GradedModule>(ring.ring_module(p, 7));
        Exponents xp = {p, 0};
        SparseMatrix w(m->dim(p), 1);
        w.set(monomial_index(ring, p, xp), 0, Rational(1));
        SubmodulePoint gen = generate_from_bottom(m, p, w);

        std::string f = "x0^" + std::to_string(p);
        SubmodulePoint ideal = ideal_submodule(ring, std::vector<std::string>{f}, p, 7);
        for (int d = p; d <= 7; ++d) {
            CHECK(gen.basis(d) == ideal.basis(d)); // both canonical echelon bases
            CHECK(gen.sub_dim(d) == d - p + 1);
        }
    }

    // the whole bottom degree generates everything above (A generated in degree 1)
    auto m = std::make_shared<GradedModule>(ring.ring_module(2, 6));
    SubmodulePoint full = generate_from_bottom(m, 2, SparseMatrix::identity(m->dim(2)));
    for (int d = 2; d <= 6; ++d)
        CHECK(full.sub_dim(d) == m->dim(d));

    // zero bottom
    SubmodulePoint zero = generate_from_bottom(m, 2, SparseMatrix(m->dim(2), 0));
    for (int d = 2; d <= 6; ++d)
        CHECK(zero.sub_dim(d) == 0);
}

TEST_CASE("chart equations for Hilb^1 of the projective line")
{
    CoordinateRing ring = poly_ring(2, 4);
    QuotProblem qp;
    qp.ambient = std::make_shared<GradedModule>(ring.ring_module(1, 2));
    qp.h = {1, 2};
    ChartSpec chart;
    chart.pivots = {{0}, {0, 1}};

    PolynomialSystem sys = chart_equations(qp, chart);
    CHECK(sys.variables.size() == 3);
    CHECK(sys.equations.size() == 2);
    for (const Poly& eq : sys.equations)
        for (const auto& [e, c] : eq) {
            (void)c;
            int total = 0;
            for (int x : e)
                total += x;
            CHECK(total <= 2);
        }

    // equations vanish at a chart point iff the point is a submodule
    std::mt19937 rng(20240612);
    std::uniform_int_distribution<int> coin(-2, 2);
    int seen_zero = 0, seen_nonzero = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> vals;
        for (size_t i = 0; i < sys.variables.size(); ++i)
            vals.push_back(Rational(coin(rng)));
        std::vector<Rational> res = evaluate_system(sys, vals);
        bool all_zero = true;
        for (const Rational& r : res)
            if (r != 0)
                all_zero = false;
        bool sub = is_submodule(chart_point(qp, chart, vals)).ok;
        CHECK(all_zero == sub);
        (all_zero ? seen_zero : seen_nonzero)++;
    }
    CHECK(seen_zero > 0);
    CHECK(seen_nonzero > 0);

    JacobianReport jr = jacobian_tangent_check(qp, chart);
    CHECK(jr.pass);
    CHECK(jr.jacobian_kernel_dim == 1);
}

TEST_CASE("infeasible dimension vector has an empty chart zero set")
{
    CoordinateRing ring = poly_ring(2, 4);
    QuotProblem qp;
    qp.ambient = std::make_shared<GradedModule>(ring.ring_module(1, 2));
    qp.h = {1, 1};

    std::mt19937 rng(999);
    std::uniform_int_distribution<int> coin(-3, 3);
    for (int p0 = 0; p0 < 2; ++p0)
        for (int p1 = 0; p1 < 3; ++p1) {
            ChartSpec chart;
            chart.pivots = {{p0}, {p1}};
            PolynomialSystem sys = chart_equations(qp, chart);
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Rational> vals;
                for (size_t i = 0; i < sys.variables.size(); ++i)
                    vals.push_back(Rational(coin(rng)));
                std::vector<Rational> res = evaluate_system(sys, vals);
                bool all_zero = true;
                for (const Rational& r : res)
                    if (r != 0)
                        all_zero = false;
                CHECK_FALSE(all_zero);
            }
        }
}

TEST_CASE("full dimension vector gives no equations")
{
    CoordinateRing ring = poly_ring(2, 4);
    QuotProblem qp;
    qp.ambient = std::make_shared<GradedModule>(ring.ring_module(1, 2));
    qp.h = {2, 3};
    ChartSpec chart;
    chart.pivots = {{0, 1}, {0, 1, 2}};
    PolynomialSystem sys = chart_equations(qp, chart);
    CHECK(sys.variables.empty());
    CHECK(sys.equations.empty());
}

TEST_CASE("jacobian matches the classical tangent at a point of the projective plane")
{
    CoordinateRing ring = poly_ring(3, 4);
    QuotProblem qp;
    qp.ambient = std::make_shared<GradedModule>(ring.ring_module(1, 2));
    qp.h = {2, 5};

    // pivots: the degree-1 and degree-2 monomials divisible by x or y
    ChartSpec chart;
    for (int d = 1; d <= 2; ++d) {
        std::vector<int> pv;
        const auto& mons = ring.monomials(d);
        for (size_t i = 0; i < mons.size(); ++i)
            if (mons[i][0] > 0 || mons[i][1] > 0)
                pv.push_back(static_cast<int>(i));
        chart.pivots.push_back(pv);
    }

    JacobianReport jr = jacobian_tangent_check(qp, chart);
    CHECK(jr.pass);
    CHECK(jr.classical_dim == 2);
}

TEST_CASE("m-homotopy on the two-generator example")
{
    FreeDgaPresentation c;
    int a = c.add_generator("a", {0, 0});
    int cc = c.add_generator("c", {0, -1});
    DgaPoly a2 = c.mul(FreeDgaPresentation::gen_poly(a), FreeDgaPresentation::gen_poly(a));
    c.set_differential(cc, a2);
    c.verify_d2();

    FreeDgaPresentation b;
    int e = b.add_generator("e", {0, 0});

    DgaMorphism f0, f1;
    f0.images = {FreeDgaPresentation::gen_poly(a)};
    f1.images = {FreeDgaPresentation::add(FreeDgaPresentation::gen_poly(a), a2)};

    MHomotopy h = m_homotopy_construct(b, c, f0, f1, 4); // verified internally
    // f_t(e) = a + t a^2, s_t(e) = c
    REQUIRE(h.f[e].size() == 2);
    CHECK(h.f[e][0] == FreeDgaPresentation::gen_poly(a));
    CHECK(h.f[e][1] == a2);
    REQUIRE(h.s[e].size() == 1);
    CHECK(h.s[e][0] == FreeDgaPresentation::gen_poly(cc));

    // algebra map at sampled rational t
    for (long num : {0L, 1L, 2L, -1L, 3L}) {
        DgaMorphism ft = evaluate_homotopy(h, Rational(num, 2));
        validate_dga_morphism(b, c, ft);
    }

    // equal endpoints need no motion
    MHomotopy id = m_homotopy_construct(b, c, f0, f0, 4);
    CHECK(id.f[e] == TPoly{FreeDgaPresentation::gen_poly(a)});
    CHECK(id.s[e].empty());

    // without c the target class is not exact
    FreeDgaPresentation c0;
    c0.add_generator("a", {0, 0});
    DgaMorphism g0, g1;
    g0.images = {FreeDgaPresentation::gen_poly(0)};
    g1.images = {FreeDgaPresentation::add(
        FreeDgaPresentation::gen_poly(0),
        c0.mul(FreeDgaPresentation::gen_poly(0), FreeDgaPresentation::gen_poly(0)))};
    CHECK_THROWS_AS(m_homotopy_construct(b, c0, g0, g1, 4), NotHomotopic);
}

TEST_CASE("m-homotopy with a second induction step")
{
    FreeDgaPresentation c;
    int a = c.add_generator("a", {0, 0});
    int cc = c.add_generator("c", {0, -1});
    DgaPoly pa = FreeDgaPresentation::gen_poly(a);
    DgaPoly a2 = c.mul(pa, pa);
    c.set_differential(cc, a2);

    FreeDgaPresentation b;
    int e = b.add_generator("e", {0, 0});
    int w = b.add_generator("w", {0, -1});
    b.set_differential(w, b.mul(FreeDgaPresentation::gen_poly(e),
                                FreeDgaPresentation::gen_poly(e)));
    b.verify_d2();

    DgaPoly pc = FreeDgaPresentation::gen_poly(cc);
    DgaMorphism f0, f1;
    f0.images.resize(2);
    f1.images.resize(2);
    f0.images[e] = pa;
    f0.images[w] = pc;
    f1.images[e] = FreeDgaPresentation::add(pa, a2);
    // d f1(w) = (a + a^2)^2 forces f1(w) = c (1 + 2a + a^2)
    DgaPoly p = FreeDgaPresentation::add(
        FreeDgaPresentation::add(FreeDgaPresentation::one(),
                                 FreeDgaPresentation::scale(pa, Rational(2))),
        a2);
    f1.images[w] = c.mul(pc, p);

    MHomotopy h = m_homotopy_construct(b, c, f0, f1, 6); // verified internally
    // the degree -1 step picks up a quadratic t-dependence
    CHECK(h.f[w].size() == 3);
    CHECK(h.s[w].empty());
}

TEST_CASE("stabilization of the Ext table for a point of the projective plane")
{
    auto ring = std::make_shared<CoordinateRing>(poly_ring(3, 9));
    ModuleProvider mprov = [ring](int q) {
        return std::make_shared<GradedModule>(submodule_module(
            ideal_submodule(*ring, std::vector<std::string>{"x0", "x1"}, 1, q)));
    };
    ModuleProvider nprov = [ring](int q) {
        return std::make_shared<GradedModule>(
            quotient_module(ideal_submodule(*ring, std::vector<std::string>{"x0", "x1"}, 1, q))
                .module);
    };

    StabilizationReport rep = stabilization_bound(mprov, nprov, 2, 3, 8);
    CHECK(rep.stable_q >= 3);
    const std::map<int, int>& stable = rep.ext.at(rep.stable_q);
    CHECK(stable.at(0) == 2);
    CHECK(stable.at(1) == 1);
    CHECK(stable.at(2) == 0);
    for (const auto& [i, v] : rep.tail_ext)
        CHECK(v == 0);

    // a free module has no higher Ext into anything on the window
    ModulePtr n6 = nprov(6);
    auto free = std::make_shared<GradedModule>(
        free_module(ring->algebra(), std::vector<int>{1, 1}, 1, 6));
    for (int i = 1; i <= 2; ++i)
        CHECK(ext_bar(free, n6, i) == 0);

    // no stabilization within an impossible cap
    CHECK_THROWS_AS(stabilization_bound(mprov, nprov, 2, 3, 3), CapReached);
}
