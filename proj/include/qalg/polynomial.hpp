#pragma once

#include <qalg/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace qalg {

// Monomials are exponent vectors of a fixed length; polynomials map
// monomials to nonzero coefficients. Variables are named x0, x1, ...
// unless callers supply names.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

int weighted_degree(const Exponents& e, const std::vector<int>& weights);

// True when the polynomial is homogeneous; degree returned through *degree
// (0 for the zero polynomial).
bool is_homogeneous(const Poly& f, const std::vector<int>& weights, int* degree);

Poly poly_add(const Poly& f, const Poly& g);
Poly poly_scale(const Poly& f, const Rational& c);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_monomial(const Exponents& e, const Rational& c = Rational(1));

// Weighted graded-lex order, descending: higher weighted degree first, then
// lexicographically larger exponent vector first. Used both for basis
// enumeration and pivot order, so normal forms are canonical.
bool grlex_less(const Exponents& a, const Exponents& b, const std::vector<int>& weights);

// All exponent vectors of weighted degree d in grlex-descending order.
std::vector<Exponents> monomials_of_degree(int num_vars, const std::vector<int>& weights, int d);

std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& names);
std::string poly_to_string(const Poly& f, const std::vector<std::string>& names,
                           const std::vector<int>& weights);

// Parses sums of terms like "3/2*x0^2*x1 - x2 + 4". Throws ParseError.
Poly parse_poly(const std::string& text, int num_vars);

std::vector<std::string> default_var_names(int num_vars);

} // namespace qalg
