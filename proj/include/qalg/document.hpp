#pragma once

#include <qalg/dga.hpp>
#include <qalg/polynomial.hpp>

#include <map>
#include <string>
#include <vector>

namespace qalg {

// A problem document: a truncated ring presentation, a window, and one task
// with its parameters. Parsed from UTF-8 JSON (schema "qalg/1"); polynomial
// and rational values are strings to stay exact.
struct DgaGeneratorSpec {
    std::string name;
    int projective = 0;
    int cohomological = 0;
};

struct DgaSpec {
    std::vector<DgaGeneratorSpec> generators;
    std::map<std::string, std::string> differentials; // by generator name
};

struct ProblemDocument {
    std::string task;

    // ring: K[x0..x_{vars-1}] / (ideal), truncated at max_degree
    int vars = 0;
    std::vector<int> var_degrees; // empty = all 1
    std::vector<std::string> ideal;
    int max_degree = 0;
    bool has_algebra = false;

    int window_low = 0;
    int window_high = 0;
    bool has_window = false;

    std::vector<std::string> submodule; // ideal generators of V
    std::string module_kind = "ideal";  // "ideal" or "residue"

    int i_max = 3;
    int arity = -1;

    // stabilize
    int q0 = -1;
    int q_cap = -1;

    // quot-eqs
    std::vector<int> h;
    std::vector<std::vector<int>> pivots;

    // tor / intersect
    std::vector<std::string> ideal_y;
    std::vector<std::string> ideal_z;

    // ract
    int space_dim = 1;

    // mhomotopy
    DgaSpec source;
    DgaSpec target;
    std::vector<std::string> f0;
    std::vector<std::string> f1;
    int exponent_cap = 6;
};

// Throws ParseError on malformed JSON, ValidationError on schema problems.
ProblemDocument parse_document(const std::string& text);

// Polynomial in the generators of a presentation, by generator name; same
// term grammar as parse_poly. Throws ParseError on unknown names.
DgaPoly parse_dga_poly(const FreeDgaPresentation& p, const std::string& text);

// FNV-1a 64-bit content digest, rendered "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

} // namespace qalg
