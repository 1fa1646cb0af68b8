#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace qalg {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as construction goes through canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "-a", "a/b". Throws ParseError on malformed input.
Rational parse_rational(const std::string& s);

// Canonical rendering: "a" or "a/b" with b > 1.
std::string to_string(const Rational& r);

} // namespace qalg
