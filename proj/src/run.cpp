#include <qalg/run.hpp>

#include <qalg/bar.hpp>
#include <qalg/charts.hpp>
#include <qalg/document.hpp>
#include <qalg/errors.hpp>
#include <qalg/intersection.hpp>
#include <qalg/mhomotopy.hpp>
#include <qalg/quot.hpp>
#include <qalg/ract.hpp>
#include <qalg/resolution.hpp>
#include <qalg/stabilization.hpp>
#include <qalg/tangent.hpp>

#include <json.hpp>
#include <omp.h>

namespace qalg {

namespace {

using ojson = nlohmann::ordered_json;

ojson table(const std::map<int, int>& m)
{
    ojson out = ojson::array();
    for (const auto& [k, v] : m)
        out.push_back(ojson::array({k, v}));
    return out;
}

CoordinateRing ring_from(const ProblemDocument& d)
{
    if (!d.has_algebra)
        throw ValidationError("task '" + d.task + "' needs an algebra presentation");
    IdealPresentation ip;
    ip.num_vars = d.vars;
    ip.var_degrees = d.var_degrees;
    ip.max_degree = d.max_degree;
    for (const std::string& s : d.ideal)
        ip.generators.push_back(parse_poly(s, d.vars));
    return CoordinateRing(std::move(ip));
}

std::vector<Poly> parse_gens(const std::vector<std::string>& gens, int vars)
{
    std::vector<Poly> out;
    for (const std::string& s : gens)
        out.push_back(parse_poly(s, vars));
    return out;
}

std::pair<int, int> window_of(const ProblemDocument& d)
{
    int p = d.has_window ? d.window_low : 0;
    int q = d.has_window ? d.window_high : d.max_degree;
    if (q > d.max_degree)
        throw ValidationError("window exceeds the ring truncation degree");
    return {p, q};
}

// The positive part of the truncated ring collapsed into projective degree
// 0: the non-unital encoding used for ungraded Ext and for the action-space
// dg-algebra. Products landing past the truncation are zero.
AlgebraPtr collapse_positive(const CoordinateRing& r)
{
    const GradedAlgebra& a = *r.algebra();
    int md = a.max_degree();
    std::vector<int> offset(md + 2, 0);
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> basis; // (degree, index within A_d)
    for (int d = 1; d <= md; ++d) {
        offset[d] = static_cast<int>(names.size());
        for (int i = 0; i < a.dim(d); ++i) {
            names.push_back(a.basis_name(d, i));
            basis.emplace_back(d, i);
        }
    }
    int dim = static_cast<int>(names.size());
    auto out = std::make_shared<GradedAlgebra>(
        0, std::vector<Component>{Component{dim, names}}, false, a.commutative());

    SparseMatrix mult(dim, dim * dim);
    for (int u = 0; u < dim; ++u)
        for (int v = 0; v < dim; ++v) {
            auto [d1, i1] = basis[u];
            auto [d2, i2] = basis[v];
            if (d1 + d2 > md)
                continue;
            std::vector<Rational> prod =
                a.mult(d1, d2).column_vector(i1 * a.dim(d2) + i2);
            for (size_t k = 0; k < prod.size(); ++k)
                if (prod[k] != 0)
                    mult.set(offset[d1 + d2] + static_cast<int>(k), u * dim + v, prod[k]);
        }
    out->set_mult(0, 0, mult);
    return out;
}

// K^n in projective degree 0 with the zero action (the trivial module over
// the collapsed positive part).
ModulePtr trivial_space(AlgebraPtr a, int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
    auto m = std::make_shared<GradedModule>(
        a, 0, 0, std::vector<Component>{Component{n, names}});
    m->set_action(0, 0, SparseMatrix(n, a->dim(0) * n));
    return m;
}

// K over the graded truncated ring, on [0, q]; every positive degree acts
// by zero.
ModulePtr residue_field(AlgebraPtr a, int q)
{
    std::vector<Component> comps(q + 1);
    comps[0] = Component{1, {"1"}};
    return std::make_shared<GradedModule>(a, 0, q, comps);
}

bool task_hilbert(const ProblemDocument& d, ojson& result)
{
    CoordinateRing ring = ring_from(d);
    auto [p, q] = window_of(d);
    GradedModule m = ring.ring_module(p, q);
    result["module"] = table(m.hilbert_function());
    if (!d.submodule.empty()) {
        SubmodulePoint pt = ideal_submodule(ring, parse_gens(d.submodule, d.vars), p, q);
        std::map<int, int> sub, quot;
        for (int deg = p; deg <= q; ++deg) {
            sub[deg] = pt.sub_dim(deg);
            quot[deg] = m.dim(deg) - pt.sub_dim(deg);
        }
        result["submodule"] = table(sub);
        result["quotient"] = table(quot);
    }
    return true;
}

bool task_ext(const ProblemDocument& d, ojson& result, ojson& checks)
{
    bool all_match = true;
    ojson rows = ojson::array();
    if (d.module_kind == "residue") {
        CoordinateRing ring = ring_from(d);
        AlgebraPtr flat = collapse_positive(ring);
        ModulePtr k = trivial_space(flat, 1);
        ModulePtr kg = residue_field(ring.algebra(), d.i_max + 2);
        for (int i = 0; i <= d.i_max; ++i) {
            int bar = ext_bar(k, k, i);
            int oracle = ext_free(kg, kg, i, HomGrading::All);
            rows.push_back({{"i", i}, {"bar", bar}, {"oracle", oracle},
                            {"match", bar == oracle}});
            all_match = all_match && bar == oracle;
        }
    } else {
        CoordinateRing ring = ring_from(d);
        auto [p, q] = window_of(d);
        if (d.submodule.empty())
            throw ValidationError("task 'ext' needs submodule generators");
        SubmodulePoint pt = ideal_submodule(ring, parse_gens(d.submodule, d.vars), p, q);
        ModulePtr v = std::make_shared<GradedModule>(submodule_module(pt));
        ModulePtr n = std::make_shared<GradedModule>(quotient_module(pt).module);
        for (int i = 0; i <= d.i_max; ++i) {
            int bar = ext_bar(v, n, i);
            int oracle = ext_free(v, n, i);
            rows.push_back({{"i", i}, {"bar", bar}, {"oracle", oracle},
                            {"match", bar == oracle}});
            all_match = all_match && bar == oracle;
        }
    }
    result["ext"] = rows;
    checks.push_back({{"name", "ext oracle agreement"}, {"pass", all_match}});
    return all_match;
}

bool task_intersect(const ProblemDocument& d, ojson& result)
{
    CoordinateRing ring = ring_from(d);
    auto [p, q] = window_of(d);
    (void)p;
    std::vector<Poly> gy = parse_gens(d.ideal_y, d.vars);
    std::vector<Poly> gz = parse_gens(d.ideal_z, d.vars);
    ojson rows = ojson::array();
    for (int i = 0; i <= d.i_max; ++i) {
        std::map<int, int> tor = derived_intersection(ring, gy, gz, i, q);
        int total = 0;
        for (const auto& [deg, h] : tor)
            total += h;
        rows.push_back({{"i", i}, {"by_degree", table(tor)}, {"total", total}});
    }
    result["tor"] = rows;
    return true;
}

bool task_quot_eqs(const ProblemDocument& d, ojson& result)
{
    CoordinateRing ring = ring_from(d);
    auto [p, q] = window_of(d);
    QuotProblem qp;
    qp.ambient = std::make_shared<GradedModule>(ring.ring_module(p, q));
    qp.h = d.h;
    ChartSpec chart;
    if (d.pivots.empty()) {
        for (int k : d.h) {
            std::vector<int> pv(k);
            for (int j = 0; j < k; ++j)
                pv[j] = j;
            chart.pivots.push_back(std::move(pv));
        }
    } else {
        chart.pivots = d.pivots;
    }

    PolynomialSystem sys = chart_equations(qp, chart);
    std::vector<int> weights(sys.variables.size(), 1);
    ojson eqs = ojson::array();
    for (const Poly& eq : sys.equations)
        eqs.push_back(poly_to_string(eq, sys.variables, weights));
    result["variables"] = sys.variables;
    result["equations"] = eqs;
    result["variable_count"] = sys.variables.size();
    result["equation_count"] = sys.equations.size();
    return true;
}

bool task_tangent(const ProblemDocument& d, ojson& result, ojson& checks)
{
    CoordinateRing ring = ring_from(d);
    auto [p, q] = window_of(d);
    if (d.submodule.empty())
        throw ValidationError("task 'tangent' needs submodule generators");
    SubmodulePoint pt = ideal_submodule(ring, parse_gens(d.submodule, d.vars), p, q);
    int cap = d.arity > 0 ? d.arity : d.i_max + 1;
    TangentReport t = tangent_rg_cone(pt, cap);

    std::map<int, int> coh, oracle;
    for (const auto& [i, v] : t.cohomology)
        if (i >= 0 && i <= d.i_max)
            coh[i] = v;
    for (const auto& [i, v] : t.oracle)
        if (i >= 0 && i <= d.i_max)
            oracle[i] = v;
    result["cohomology"] = table(coh);
    result["oracle"] = table(oracle);
    result["match"] = t.pass;
    checks.push_back({{"name", "tangent cohomology vs classical Ext"}, {"pass", t.pass}});
    return t.pass;
}

bool task_ract(const ProblemDocument& d, ojson& result)
{
    CoordinateRing ring = ring_from(d);
    AlgebraPtr flat = collapse_positive(ring);
    ModulePtr space = trivial_space(flat, d.space_dim);
    int arity = d.arity > 0 ? d.arity : 3;
    RactDga r = build_ract_dga(space, arity); // d^2 = 0 verified inside

    ojson gens = ojson::array();
    for (int n = 1; n <= arity; ++n)
        gens.push_back(ojson::array({n, r.gen_of[n - 1].size()}));
    ojson pi0 = ojson::array();
    for (const DgaPoly& g : pi0_ideal(r))
        pi0.push_back(r.dga.to_string(g));
    result["generators_per_arity"] = gens;
    result["pi0_ideal"] = pi0;
    return true;
}

bool task_stabilize(const ProblemDocument& d, ojson& result)
{
    auto ring = std::make_shared<CoordinateRing>(ring_from(d));
    if (d.submodule.empty())
        throw ValidationError("task 'stabilize' needs submodule generators");
    std::vector<Poly> gens = parse_gens(d.submodule, d.vars);
    int p = d.has_window ? d.window_low : 1;
    int q0 = d.q0 > 0 ? d.q0 : p + 2;
    int q_cap = d.q_cap > 0 ? d.q_cap : d.max_degree;
    if (q_cap > d.max_degree)
        throw ValidationError("q_cap exceeds the ring truncation degree");

    ModuleProvider mprov = [ring, gens, p](int q) {
        return std::make_shared<GradedModule>(
            submodule_module(ideal_submodule(*ring, gens, p, q)));
    };
    ModuleProvider nprov = [ring, gens, p](int q) {
        return std::make_shared<GradedModule>(
            quotient_module(ideal_submodule(*ring, gens, p, q)).module);
    };

    try {
        StabilizationReport rep = stabilization_bound(mprov, nprov, d.i_max, q0, q_cap);
        result["stabilized"] = true;
        result["stable_q"] = rep.stable_q;
        ojson rows = ojson::array();
        for (const auto& [q, row] : rep.ext)
            rows.push_back(ojson::array({q, table(row)}));
        result["ext_by_ceiling"] = rows;
        result["tail_ext"] = table(rep.tail_ext);
    } catch (const CapReached& e) {
        result["stabilized"] = false;
        result["q_cap"] = q_cap;
        result["message"] = e.what();
    }
    return true;
}

FreeDgaPresentation presentation_from(const DgaSpec& spec)
{
    FreeDgaPresentation p;
    for (const DgaGeneratorSpec& g : spec.generators)
        p.add_generator(g.name, BiDegree{g.projective, g.cohomological});
    for (const auto& [name, poly] : spec.differentials) {
        int idx = p.generator_index(name);
        if (idx < 0)
            throw ValidationError("differential given for unknown generator '" + name + "'");
        p.set_differential(idx, parse_dga_poly(p, poly));
    }
    p.verify_d2();
    return p;
}

bool task_mhomotopy(const ProblemDocument& d, ojson& result, ojson& checks)
{
    FreeDgaPresentation b = presentation_from(d.source);
    FreeDgaPresentation c = presentation_from(d.target);
    DgaMorphism f0, f1;
    for (const std::string& s : d.f0)
        f0.images.push_back(parse_dga_poly(c, s));
    for (const std::string& s : d.f1)
        f1.images.push_back(parse_dga_poly(c, s));
    validate_dga_morphism(b, c, f0);
    validate_dga_morphism(b, c, f1);

    int cap = d.arity > 0 ? d.arity : d.exponent_cap;
    MHomotopy h = m_homotopy_construct(b, c, f0, f1, cap); // verified exactly inside

    ojson gens = ojson::array();
    for (int g = 0; g < b.num_generators(); ++g) {
        ojson ft = ojson::array(), st = ojson::array();
        for (const DgaPoly& coeff : h.f[g])
            ft.push_back(c.to_string(coeff));
        for (const DgaPoly& coeff : h.s[g])
            st.push_back(c.to_string(coeff));
        gens.push_back({{"generator", b.generator(g).name},
                        {"f_t_coefficients", ft},
                        {"s_t_coefficients", st}});
    }
    result["homotopy"] = gens;
    checks.push_back({{"name", "homotopy identity f_t' = d s_t + s_t d"}, {"pass", true}});
    return true;
}

int error_exit_code(const Error& e)
{
    if (dynamic_cast<const SignError*>(&e) || dynamic_cast<const CompositionNonzero*>(&e) ||
        dynamic_cast<const NotAnAction*>(&e) || dynamic_cast<const NotHomotopic*>(&e) ||
        dynamic_cast<const AcyclicityFailure*>(&e) ||
        dynamic_cast<const WindowUnstable*>(&e))
        return 2;
    return 1;
}

std::string error_type(const Error& e)
{
    if (dynamic_cast<const ParseError*>(&e))
        return "parse";
    if (dynamic_cast<const ValidationError*>(&e))
        return "validation";
    if (dynamic_cast<const NotHomotopic*>(&e))
        return "not-homotopic";
    if (dynamic_cast<const NotASubmodule*>(&e))
        return "not-a-submodule";
    if (dynamic_cast<const CapReached*>(&e))
        return "cap-reached";
    if (dynamic_cast<const WindowUnstable*>(&e))
        return "window-unstable";
    return "error";
}

} // namespace

RunResult run_document(const std::string& document_text, const RunFlags& flags)
{
    if (flags.threads > 0)
        omp_set_num_threads(flags.threads);

    ojson report;
    report["schema"] = "qalg-report/1";
    try {
        ProblemDocument d = parse_document(document_text);
        if (!flags.task.empty())
            d.task = flags.task;
        if (flags.max_degree > 0) {
            d.max_degree = flags.max_degree;
            if (d.has_window && d.window_high > flags.max_degree)
                d.window_high = flags.max_degree;
        }
        if (flags.arity > 0)
            d.arity = flags.arity;

        report["task"] = d.task;
        report["input"] = {{"digest", content_digest(document_text)},
                           {"document", ojson::parse(document_text)}};

        ojson result = ojson::object();
        ojson checks = ojson::array();
        bool ok = false;
        if (d.task == "hilbert")
            ok = task_hilbert(d, result);
        else if (d.task == "ext")
            ok = task_ext(d, result, checks);
        else if (d.task == "tor" || d.task == "intersect")
            ok = task_intersect(d, result);
        else if (d.task == "quot-eqs")
            ok = task_quot_eqs(d, result);
        else if (d.task == "tangent")
            ok = task_tangent(d, result, checks);
        else if (d.task == "ract")
            ok = task_ract(d, result);
        else if (d.task == "stabilize")
            ok = task_stabilize(d, result);
        else if (d.task == "mhomotopy")
            ok = task_mhomotopy(d, result, checks);
        else
            throw ValidationError("unknown task '" + d.task + "'");

        report["result"] = result;
        report["checks"] = checks;
        report["status"] = ok ? "ok" : "check-failed";
        return {report.dump(2) + "\n", ok ? 0 : 2};
    } catch (const Error& e) {
        report["status"] = "error";
        report["error"] = {{"type", error_type(e)}, {"message", e.what()}};
        return {report.dump(2) + "\n", error_exit_code(e)};
    } catch (const std::exception& e) {
        report["status"] = "error";
        report["error"] = {{"type", "error"}, {"message", e.what()}};
        return {report.dump(2) + "\n", 1};
    }
}

} // namespace qalg
