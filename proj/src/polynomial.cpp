#include <qalg/polynomial.hpp>

#include <qalg/errors.hpp>

#include <algorithm>
#include <cctype>

namespace qalg {

int weighted_degree(const Exponents& e, const std::vector<int>& weights)
{
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        d += e[i] * weights[i];
    return d;
}

bool is_homogeneous(const Poly& f, const std::vector<int>& weights, int* degree)
{
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : f) {
        (void)c;
        int de = weighted_degree(e, weights);
        if (first) {
            d = de;
            first = false;
        } else if (de != d) {
            return false;
        }
    }
    if (degree)
        *degree = first ? 0 : d;
    return true;
}

Poly poly_add(const Poly& f, const Poly& g)
{
    Poly out = f;
    for (const auto& [e, c] : g) {
        Rational& slot = out[e];
        slot += c;
        if (slot == 0)
            out.erase(e);
    }
    return out;
}

Poly poly_scale(const Poly& f, const Rational& c)
{
    Poly out;
    if (c == 0)
        return out;
    for (const auto& [e, v] : f)
        out[e] = v * c;
    return out;
}

Poly poly_mul(const Poly& f, const Poly& g)
{
    Poly out;
    for (const auto& [ef, cf] : f)
        for (const auto& [eg, cg] : g) {
            Exponents e(ef);
            for (size_t i = 0; i < e.size(); ++i)
                e[i] += eg[i];
            Rational& slot = out[e];
            slot += cf * cg;
            if (slot == 0)
                out.erase(e);
        }
    return out;
}

Poly poly_monomial(const Exponents& e, const Rational& c)
{
    Poly out;
    if (c != 0)
        out[e] = c;
    return out;
}

bool grlex_less(const Exponents& a, const Exponents& b, const std::vector<int>& weights)
{
    // "less" in the descending enumeration order: a comes after b.
    int da = weighted_degree(a, weights);
    int db = weighted_degree(b, weights);
    if (da != db)
        return da > db ? false : true;
    return a < b; // lex-smaller exponent vector comes later
}

namespace {

void enumerate(int var, int remaining, Exponents& current, const std::vector<int>& weights,
               std::vector<Exponents>& out)
{
    int n = static_cast<int>(current.size());
    if (var == n) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    int w = weights[var];
    int cap = w > 0 ? remaining / w : 0;
    // Largest exponent first so x0^d precedes x0^{d-1} x1 etc.
    for (int e = cap; e >= 0; --e) {
        current[var] = e;
        enumerate(var + 1, remaining - e * w, current, weights, out);
    }
    current[var] = 0;
}

} // namespace

std::vector<Exponents> monomials_of_degree(int num_vars, const std::vector<int>& weights, int d)
{
    std::vector<Exponents> out;
    if (d < 0)
        return out;
    Exponents current(num_vars, 0);
    enumerate(0, d, current, weights, out);
    return out;
}

std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names)
{
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += names[i];
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    if (s.empty())
        s = "1";
    return s;
}

std::string poly_to_string(const Poly& f, const std::vector<std::string>& names,
                           const std::vector<int>& weights)
{
    if (f.empty())
        return "0";
    // Render in grlex-descending order.
    std::vector<const Exponents*> keys;
    for (const auto& [e, c] : f) {
        (void)c;
        keys.push_back(&e);
    }
    std::sort(keys.begin(), keys.end(), [&](const Exponents* a, const Exponents* b) {
        return grlex_less(*b, *a, weights);
    });
    std::string s;
    for (const Exponents* e : keys) {
        const Rational& c = f.at(*e);
        std::string mono = monomial_to_string(*e, names);
        Rational abs = c < 0 ? Rational(-c) : c;
        std::string coef = to_string(abs);
        std::string term;
        if (mono == "1")
            term = coef;
        else if (coef == "1")
            term = mono;
        else
            term = coef + "*" + mono;
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;
    int num_vars;

    void skip_ws()
    {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool eat(char c)
    {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek()
    {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what)
    {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " +
                         what + " in \"" + text + "\"");
    }

    long parse_integer()
    {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    Rational parse_coefficient()
    {
        long num = parse_integer();
        if (eat('/')) {
            long den = parse_integer();
            if (den == 0)
                fail("zero denominator");
            return rat(num, den);
        }
        return Rational(num);
    }

    // var ['^' int], returning (index, exponent)
    std::pair<int, int> parse_factor_var()
    {
        skip_ws();
        if (peek() != 'x')
            fail("expected a variable like x0");
        ++pos;
        long idx = parse_integer();
        if (idx < 0 || idx >= num_vars)
            fail("variable index out of range");
        int exp = 1;
        if (eat('^'))
            exp = static_cast<int>(parse_integer());
        if (exp < 0)
            fail("negative exponent");
        return {static_cast<int>(idx), exp};
    }

    Poly parse_term()
    {
        Rational coef(1);
        Exponents e(num_vars, 0);
        bool saw_factor = false;
        for (;;) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coef *= parse_coefficient();
                saw_factor = true;
            } else if (c == 'x') {
                auto [idx, exp] = parse_factor_var();
                e[idx] += exp;
                saw_factor = true;
            } else if (c == '(') {
                fail("parentheses are not supported");
            } else {
                fail("expected a coefficient or variable");
            }
            if (!eat('*'))
                break;
        }
        if (!saw_factor)
            fail("empty term");
        return poly_monomial(e, coef);
    }

    Poly parse()
    {
        Poly out;
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        for (;;) {
            Poly term = parse_term();
            out = poly_add(out, negate ? poly_scale(term, Rational(-1)) : term);
            char c = peek();
            if (c == '+') {
                ++pos;
                negate = false;
            } else if (c == '-') {
                ++pos;
                negate = true;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != text.size())
            fail("unexpected trailing input");
        return out;
    }
};

} // namespace

Poly parse_poly(const std::string& text, int num_vars)
{
    Parser p{text, 0, num_vars};
    return p.parse();
}

std::vector<std::string> default_var_names(int num_vars)
{
    std::vector<std::string> names;
    for (int i = 0; i < num_vars; ++i)
        names.push_back("x" + std::to_string(i));
    return names;
}

} // namespace qalg
