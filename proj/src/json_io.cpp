#include "diffwitt/json_io.hpp"

#include <stdexcept>

#include "diffwitt/parse.hpp"

namespace diffwitt {

namespace {

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("JSON object is missing \"") + key + "\"");
    return j.at(key);
}

std::size_t positive(const json& j, const char* key)
{
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw std::invalid_argument(std::string("\"") + key + "\" must be a positive integer");
    return v.get<std::size_t>();
}

std::vector<std::uint32_t> index_vector(const json& j, std::size_t expected, const char* what)
{
    if (!j.is_array() || j.size() != expected)
        throw std::invalid_argument(std::string(what) + " must be an array of length " + std::to_string(expected));
    std::vector<std::uint32_t> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw std::invalid_argument(std::string(what) + " entries must be non-negative integers");
        out.push_back(x.get<std::uint32_t>());
    }
    return out;
}

} // namespace

json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be an integer or an \"a/b\" string");
}

json to_json(const Poly& p)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back({{"c", to_json(c)}, {"e", e}});
    return {{"m", p.var_count()}, {"terms", terms}};
}

Poly poly_from_json(const json& j)
{
    const std::size_t m = positive(j, "m");
    Poly p(m);
    for (const auto& t : field(j, "terms"))
        p.add_term(index_vector(field(t, "e"), m, "exponent"), rational_from_json(field(t, "c")));
    return p;
}

json to_json(const DiffPoly& f)
{
    json terms = json::array();
    for (const auto& [u, c] : f.terms()) {
        json factors = json::array();
        for (const auto& y : u.factors())
            factors.push_back({{"g", y.gen}, {"t", y.theta.index}});
        terms.push_back({{"c", to_json(c)}, {"factors", factors}});
    }
    return {{"m", f.derivations()}, {"n", f.gen_count()}, {"terms", terms}};
}

DiffPoly diffpoly_from_json(const json& j)
{
    const std::size_t m = positive(j, "m");
    std::size_t n = 0;
    if (j.contains("n"))
        n = j.at("n").get<std::size_t>();
    DiffPoly f(m, n);
    for (const auto& t : field(j, "terms")) {
        std::vector<DiffIndeterminate> factors;
        for (const auto& y : field(t, "factors")) {
            const json& g = field(y, "g");
            if (!g.is_number_integer() || g.get<long long>() < 1)
                throw std::invalid_argument("generator index \"g\" must be a positive integer");
            factors.push_back({g.get<std::uint32_t>(), DerivOp(index_vector(field(y, "t"), m, "derivative operator"))});
        }
        Poly c = poly_from_json(field(t, "c"));
        f.add_term(DiffMonomial(std::move(factors)), c);
    }
    return f;
}

json to_json(const EnvElement& u)
{
    json terms = json::array();
    for (const auto& [theta, r] : u.terms())
        terms.push_back({{"theta", theta.index}, {"c", to_json(r)}});
    return {{"m", u.derivations()}, {"terms", terms}};
}

EnvElement env_from_json(const json& j)
{
    const std::size_t m = positive(j, "m");
    EnvElement u(m);
    for (const auto& t : field(j, "terms"))
        u.add_term(DerivOp(index_vector(field(t, "theta"), m, "theta")), diffpoly_from_json(field(t, "c")));
    return u;
}

json to_json(const VectorField& u)
{
    json comps = json::array();
    for (const auto& f : u.components())
        comps.push_back(to_json(f));
    return {{"m", u.derivations()}, {"components", comps}};
}

VectorField vector_field_from_json(const json& j)
{
    const std::size_t m = positive(j, "m");
    const json& comps = field(j, "components");
    if (!comps.is_array() || comps.size() != m)
        throw std::invalid_argument("vector field needs exactly m components");
    std::vector<DiffPoly> c;
    for (const auto& f : comps)
        c.push_back(diffpoly_from_json(f));
    return VectorField(std::move(c));
}

json to_json(const Element& e)
{
    if (const auto* p = std::get_if<PoissonElement>(&e))
        return {{"type", "poisson"}, {"value", to_json(p->value())}, {"text", to_string(*p)}};
    json j = to_json(std::get<VectorField>(e));
    j["type"] = "vector_field";
    j["text"] = to_string(e);
    return j;
}

Element element_from_json(const json& j)
{
    const std::string type = field(j, "type").get<std::string>();
    if (type == "poisson")
        return PoissonElement(diffpoly_from_json(field(j, "value")));
    if (type == "vector_field")
        return vector_field_from_json(j);
    throw std::invalid_argument("unknown element type \"" + type + "\"");
}

json to_json(const StructureConstants& alg)
{
    json gamma = json::array();
    for (const auto& row : alg.table()) {
        json r = json::array();
        for (const auto& entry : row) {
            json e = json::array();
            for (const auto& q : entry)
                e.push_back(is_integer(q) && q.get_num().fits_slong_p() ? json(q.get_num().get_si()) : to_json(q));
            r.push_back(e);
        }
        gamma.push_back(r);
    }
    return {{"dim", alg.dim()}, {"gamma", gamma}};
}

StructureConstants structure_constants_from_json(const json& j)
{
    const std::size_t dim = positive(j, "dim");
    const json& gamma = field(j, "gamma");
    std::vector<std::vector<std::vector<Rational>>> table;
    if (!gamma.is_array() || gamma.size() != dim)
        throw std::invalid_argument("\"gamma\" must be a dim x dim x dim array");
    for (const auto& row : gamma) {
        if (!row.is_array() || row.size() != dim)
            throw std::invalid_argument("\"gamma\" must be a dim x dim x dim array");
        auto& out_row = table.emplace_back();
        for (const auto& entry : row) {
            if (!entry.is_array() || entry.size() != dim)
                throw std::invalid_argument("\"gamma\" must be a dim x dim x dim array");
            auto& out_entry = out_row.emplace_back();
            for (const auto& q : entry)
                out_entry.push_back(rational_from_json(q));
        }
    }
    return StructureConstants(std::move(table));
}

json to_json(const EqSystem& s)
{
    json eqs = json::array();
    for (const auto& t : s.equations)
        eqs.push_back(to_string(t));
    return {{"schema", kSchemaVersion}, {"variety", s.variety.name()}, {"n", s.n}, {"equations", eqs}};
}

EqSystem eqsystem_from_json(const json& j)
{
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        throw std::invalid_argument("unsupported schema version " + j.at("schema").dump());
    EqSystem s;
    s.variety = Variety::parse(field(j, "variety").get<std::string>());
    s.n = positive(j, "n");
    for (const auto& e : field(j, "equations")) {
        if (!e.is_string())
            throw std::invalid_argument("equations must be strings in the term grammar");
        FreeTerm t = parse_term(e.get<std::string>(), s.variety);
        validate(t, s.variety, s.n);
        s.equations.push_back(std::move(t));
    }
    return s;
}

} // namespace diffwitt
