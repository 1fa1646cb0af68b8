#include <qalg/document.hpp>

#include <qalg/errors.hpp>

#include <json.hpp>

#include <cctype>

namespace qalg {

namespace {

using json = nlohmann::json;

int require_int(const json& j, const std::string& key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ValidationError("document needs integer field '" + key + "'");
    return j[key].get<int>();
}

int optional_int(const json& j, const std::string& key, int fallback)
{
    if (!j.contains(key))
        return fallback;
    if (!j[key].is_number_integer())
        throw ValidationError("field '" + key + "' must be an integer");
    return j[key].get<int>();
}

std::vector<std::string> string_list(const json& j, const std::string& key)
{
    std::vector<std::string> out;
    if (!j.contains(key))
        return out;
    if (!j[key].is_array())
        throw ValidationError("field '" + key + "' must be an array of strings");
    for (const auto& e : j[key]) {
        if (!e.is_string())
            throw ValidationError("field '" + key + "' must contain strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

std::vector<int> int_list(const json& j, const std::string& key)
{
    std::vector<int> out;
    if (!j.contains(key))
        return out;
    if (!j[key].is_array())
        throw ValidationError("field '" + key + "' must be an array of integers");
    for (const auto& e : j[key]) {
        if (!e.is_number_integer())
            throw ValidationError("field '" + key + "' must contain integers");
        out.push_back(e.get<int>());
    }
    return out;
}

DgaSpec dga_spec(const json& j, const std::string& key)
{
    if (!j.contains(key) || !j[key].is_object())
        throw ValidationError("task needs a '" + key + "' presentation object");
    const json& d = j[key];
    DgaSpec spec;
    if (!d.contains("generators") || !d["generators"].is_array())
        throw ValidationError("presentation '" + key + "' needs a generator array");
    for (const auto& g : d["generators"]) {
        DgaGeneratorSpec gs;
        if (!g.contains("name") || !g["name"].is_string())
            throw ValidationError("each generator needs a name");
        gs.name = g["name"].get<std::string>();
        gs.projective = optional_int(g, "projective", 0);
        gs.cohomological = require_int(g, "cohomological");
        spec.generators.push_back(std::move(gs));
    }
    if (d.contains("differentials")) {
        if (!d["differentials"].is_object())
            throw ValidationError("'differentials' must map generator names to polynomials");
        for (const auto& [name, poly] : d["differentials"].items()) {
            if (!poly.is_string())
                throw ValidationError("differential of '" + name + "' must be a string");
            spec.differentials[name] = poly.get<std::string>();
        }
    }
    return spec;
}

} // namespace

ProblemDocument parse_document(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed document JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ValidationError("document must be a JSON object");
    if (!j.contains("schema") || j["schema"] != "qalg/1")
        throw ValidationError("document schema must be \"qalg/1\"");
    if (!j.contains("task") || !j["task"].is_string())
        throw ValidationError("document needs a task name");

    ProblemDocument d;
    d.task = j["task"].get<std::string>();

    if (j.contains("algebra")) {
        const json& a = j["algebra"];
        if (!a.is_object())
            throw ValidationError("'algebra' must be an object");
        d.has_algebra = true;
        d.vars = require_int(a, "vars");
        d.var_degrees = int_list(a, "var_degrees");
        d.ideal = string_list(a, "ideal");
        d.max_degree = require_int(a, "max_degree");
        if (d.vars <= 0 || d.max_degree < 0)
            throw ValidationError("algebra needs vars > 0 and max_degree >= 0");
    }

    if (j.contains("window")) {
        std::vector<int> w = int_list(j, "window");
        if (w.size() != 2 || w[0] > w[1])
            throw ValidationError("'window' must be [low, high] with low <= high");
        d.has_window = true;
        d.window_low = w[0];
        d.window_high = w[1];
    }

    d.submodule = string_list(j, "submodule");
    if (j.contains("module_kind")) {
        if (!j["module_kind"].is_string())
            throw ValidationError("'module_kind' must be a string");
        d.module_kind = j["module_kind"].get<std::string>();
        if (d.module_kind != "ideal" && d.module_kind != "residue")
            throw ValidationError("'module_kind' must be \"ideal\" or \"residue\"");
    }

    d.i_max = optional_int(j, "i_max", 3);
    d.arity = optional_int(j, "arity", -1);
    d.q0 = optional_int(j, "q0", -1);
    d.q_cap = optional_int(j, "q_cap", -1);
    d.h = int_list(j, "h");
    if (j.contains("pivots")) {
        if (!j["pivots"].is_array())
            throw ValidationError("'pivots' must be an array of integer arrays");
        for (const auto& row : j["pivots"]) {
            std::vector<int> pv;
            for (const auto& e : row) {
                if (!e.is_number_integer())
                    throw ValidationError("'pivots' must contain integers");
                pv.push_back(e.get<int>());
            }
            d.pivots.push_back(std::move(pv));
        }
    }
    d.ideal_y = string_list(j, "ideal_y");
    d.ideal_z = string_list(j, "ideal_z");
    d.space_dim = optional_int(j, "space_dim", 1);
    d.exponent_cap = optional_int(j, "exponent_cap", 6);

    if (d.task == "mhomotopy") {
        d.source = dga_spec(j, "source");
        d.target = dga_spec(j, "target");
        d.f0 = string_list(j, "f0");
        d.f1 = string_list(j, "f1");
        if (d.f0.size() != d.source.generators.size() ||
            d.f1.size() != d.source.generators.size())
            throw ValidationError("'f0' and 'f1' need one image per source generator");
    }

    return d;
}

namespace {

// Shared term grammar with parse_poly: '+'/'-' separated terms, '*'
// separated factors, each factor a rational constant or name['^' exponent].
struct DgaParser {
    const FreeDgaPresentation& pres;
    const std::string& s;
    size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool name_char(char c) const
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    DgaPoly parse()
    {
        DgaPoly out;
        skip();
        if (pos == s.size())
            return out; // empty string = 0
        bool first = true;
        while (pos < s.size()) {
            int sign = 1;
            skip();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos) +
                                 " in \"" + s + "\"");
            }
            first = false;
            term(out, sign);
            skip();
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    void term(DgaPoly& out, int sign)
    {
        Rational coeff(sign);
        DgaPoly mono = FreeDgaPresentation::one();
        bool any = false;
        while (true) {
            skip();
            if (pos >= s.size())
                break;
            char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= rational();
            } else if (name_char(c)) {
                mono = pres.mul(mono, factor());
            } else {
                break;
            }
            any = true;
            skip();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any)
            throw ParseError("empty term in \"" + s + "\"");
        for (const auto& [m, c] : mono) {
            auto [it, fresh] = out.emplace(m, coeff * c);
            if (!fresh)
                it->second += coeff * c;
        }
    }

    Rational rational()
    {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        std::string num = s.substr(start, pos - start);
        skip();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip();
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (start == pos)
                throw ParseError("missing denominator in \"" + s + "\"");
            num += "/" + s.substr(start, pos - start);
        }
        return parse_rational(num);
    }

    DgaPoly factor()
    {
        size_t start = pos;
        while (pos < s.size() && name_char(s[pos]))
            ++pos;
        std::string name = s.substr(start, pos - start);
        int gen = pres.generator_index(name);
        if (gen < 0)
            throw ParseError("unknown generator '" + name + "' in \"" + s + "\"");
        int exp = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            skip();
            start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                ++pos;
            if (start == pos)
                throw ParseError("missing exponent in \"" + s + "\"");
            exp = std::stoi(s.substr(start, pos - start));
            if (exp <= 0)
                throw ParseError("exponents must be positive in \"" + s + "\"");
        }
        DgaPoly out = FreeDgaPresentation::one();
        DgaPoly g = FreeDgaPresentation::gen_poly(gen);
        for (int k = 0; k < exp; ++k)
            out = pres.mul(out, g);
        return out;
    }
};

} // namespace

DgaPoly parse_dga_poly(const FreeDgaPresentation& p, const std::string& text)
{
    DgaParser parser{p, text};
    return parser.parse();
}

std::string content_digest(const std::string& bytes)
{
    unsigned long long h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string("fnv1a64:") + buf;
}

} // namespace qalg
