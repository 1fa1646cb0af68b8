#include <qalg/rational.hpp>

#include <qalg/errors.hpp>

namespace qalg {

Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0)
            throw ParseError("zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational literal '" + s + "'");
    }
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace qalg
