#include <qalg/dga.hpp>

#include <qalg/errors.hpp>
#include <qalg/rational.hpp>

namespace qalg {

int FreeDgaPresentation::add_generator(const std::string& name, BiDegree degree)
{
    gens_.push_back({name, degree});
    diffs_.push_back({});
    return static_cast<int>(gens_.size()) - 1;
}

void FreeDgaPresentation::set_differential(int gen, DgaPoly d)
{
    BiDegree expect = gens_.at(gen).degree;
    expect.cohomological += 1;
    BiDegree got;
    if (!homogeneous(d, &got))
        throw InconsistentGrading("differential of " + gens_[gen].name + " is not homogeneous");
    if (!d.empty() && !(got == expect))
        throw InconsistentGrading("differential of " + gens_[gen].name +
                                  " has the wrong degree");
    diffs_[gen] = std::move(d);
}

int FreeDgaPresentation::generator_index(const std::string& name) const
{
    for (size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

BiDegree FreeDgaPresentation::degree(const DgaMonomial& m) const
{
    BiDegree d;
    for (const auto& [g, e] : m) {
        d.projective += e * gens_.at(g).degree.projective;
        d.cohomological += e * gens_.at(g).degree.cohomological;
    }
    return d;
}

bool FreeDgaPresentation::homogeneous(const DgaPoly& f, BiDegree* deg) const
{
    bool first = true;
    BiDegree d;
    for (const auto& [m, c] : f) {
        (void)c;
        BiDegree dm = degree(m);
        if (first) {
            d = dm;
            first = false;
        } else if (!(dm == d)) {
            return false;
        }
    }
    if (deg)
        *deg = first ? BiDegree{} : d;
    return true;
}

bool FreeDgaPresentation::mul_monomials(const DgaMonomial& a, const DgaMonomial& b,
                                        DgaMonomial* out, int* sign) const
{
    // Koszul sign: odd factors of b moving left past odd factors of a with
    // a larger generator index.
    int parity = 0;
    std::vector<int> odd_a;
    for (const auto& [g, e] : a)
        if (gens_[g].degree.cohomological % 2 != 0)
            odd_a.push_back(g);
    for (const auto& [g, e] : b) {
        (void)e;
        if (gens_[g].degree.cohomological % 2 != 0)
            for (int ga : odd_a)
                if (ga > g)
                    ++parity;
    }

    DgaMonomial merged;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            merged.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            merged.push_back(b[j++]);
        } else {
            int g = a[i].first;
            int e = a[i].second + b[j].second;
            if (gens_[g].degree.cohomological % 2 != 0)
                return false; // odd generator squared
            merged.push_back({g, e});
            ++i;
            ++j;
        }
    }
    *out = std::move(merged);
    *sign = (parity % 2 == 0) ? 1 : -1;
    return true;
}

DgaPoly FreeDgaPresentation::mul(const DgaPoly& f, const DgaPoly& g) const
{
    DgaPoly out;
    for (const auto& [ma, ca] : f)
        for (const auto& [mb, cb] : g) {
            DgaMonomial m;
            int sign;
            if (!mul_monomials(ma, mb, &m, &sign))
                continue;
            Rational& slot = out[m];
            Rational prod = ca * cb;
            slot += (sign > 0 ? prod : Rational(-prod));
            if (slot == 0)
                out.erase(m);
        }
    return out;
}

DgaPoly FreeDgaPresentation::add(const DgaPoly& f, const DgaPoly& g)
{
    DgaPoly out = f;
    for (const auto& [m, c] : g) {
        Rational& slot = out[m];
        slot += c;
        if (slot == 0)
            out.erase(m);
    }
    return out;
}

DgaPoly FreeDgaPresentation::scale(const DgaPoly& f, const Rational& c)
{
    DgaPoly out;
    if (c == 0)
        return out;
    for (const auto& [m, v] : f)
        out[m] = v * c;
    return out;
}

DgaPoly FreeDgaPresentation::one()
{
    DgaPoly out;
    out[{}] = 1;
    return out;
}

DgaPoly FreeDgaPresentation::gen_poly(int gen)
{
    DgaPoly out;
    out[{{gen, 1}}] = 1;
    return out;
}

DgaPoly FreeDgaPresentation::d(const DgaPoly& f) const
{
    DgaPoly out;
    for (const auto& [m, c] : f) {
        // d over the factors, Leibniz with the sign of the passed prefix.
        int prefix_parity = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            auto [g, e] = m[i];
            const DgaPoly& dg = diffs_.at(g);
            if (!dg.empty()) {
                // prefix * (e g^{e-1} dg) * suffix
                DgaMonomial prefix(m.begin(), m.begin() + i);
                DgaMonomial suffix(m.begin() + i + 1, m.end());
                DgaPoly mid = dg;
                if (e > 1) {
                    DgaPoly pw;
                    pw[{{g, e - 1}}] = e;
                    mid = mul(pw, dg); // g even here, no sign subtleties
                }
                DgaPoly term = mul(mul(DgaPoly{{prefix, Rational(1)}}, mid),
                                   DgaPoly{{suffix, Rational(1)}});
                int sign = (prefix_parity % 2 == 0) ? 1 : -1;
                out = add(out, scale(term, Rational(sign) * c));
            }
            prefix_parity += e * gens_[g].degree.cohomological;
        }
    }
    return out;
}

void FreeDgaPresentation::verify_d2() const
{
    for (int g = 0; g < num_generators(); ++g) {
        DgaPoly dd = d(diffs_[g]);
        if (!dd.empty())
            throw SignError("d^2 != 0 on generator " + gens_[g].name + ": d(d(" +
                            gens_[g].name + ")) = " + to_string(dd));
    }
}

std::vector<DgaMonomial> FreeDgaPresentation::monomial_basis(BiDegree target, int cap) const
{
    // Enumerate all monomials with total exponent <= cap, keep the ones of
    // the requested bidegree. Generator indices ascend, so the order is
    // deterministic.
    std::vector<DgaMonomial> out;
    DgaMonomial cur;
    auto rec = [&](auto&& self, int gen, int remaining) -> void {
        if (gen == num_generators()) {
            if (degree(cur) == target)
                out.push_back(cur);
            return;
        }
        self(self, gen + 1, remaining);
        int ecap = (gens_[gen].degree.cohomological % 2 != 0) ? 1 : remaining;
        for (int e = 1; e <= ecap && e <= remaining; ++e) {
            cur.push_back({gen, e});
            self(self, gen + 1, remaining - e);
            cur.pop_back();
        }
    };
    rec(rec, 0, cap);
    return out;
}

Rational FreeDgaPresentation::evaluate(const DgaPoly& f, const std::vector<Rational>& values)
{
    Rational out(0);
    for (const auto& [m, c] : f) {
        Rational term = c;
        for (const auto& [g, e] : m)
            for (int k = 0; k < e; ++k)
                term *= values.at(g);
        out += term;
    }
    return out;
}

std::string FreeDgaPresentation::to_string(const DgaPoly& f) const
{
    if (f.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : f) {
        std::string mono;
        for (const auto& [g, e] : m) {
            if (!mono.empty())
                mono += "*";
            mono += gens_[g].name;
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            mono = "1";
        Rational abs = c < 0 ? Rational(-c) : c;
        std::string coef = qalg::to_string(abs);
        std::string term = (coef == "1" && mono != "1") ? mono
                           : (mono == "1")              ? coef
                                                        : coef + "*" + mono;
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

} // namespace qalg
