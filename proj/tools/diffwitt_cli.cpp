#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "diffwitt/json_io.hpp"
#include "diffwitt/parse.hpp"

using namespace diffwitt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

struct Options {
    std::string variety = "W1";
    std::string term;
    std::string expr;
    std::string input;
    std::string kind = "poly";
    std::size_t m = 1;
    std::size_t n = 0;
    std::vector<std::string> args;
    std::string left, right;
    bool lsym = false;
    std::string algebra = "M2";
    std::string system, other;
    std::uint32_t deg = 2;
    std::size_t samples = 64;
    std::uint64_t seed = 42;
    bool json = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trimmed(std::string s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start])))
        ++start;
    return s.substr(start);
}

/// The primary text argument: --term/--expr, or the contents of --input.
std::string text_argument(const Options& o, const std::string& inline_text, const char* flag)
{
    if (!o.input.empty()) {
        if (!inline_text.empty())
            throw std::invalid_argument(std::string("give either ") + flag + " or --input, not both");
        return trimmed(read_file(o.input));
    }
    if (inline_text.empty())
        throw std::invalid_argument(std::string("missing ") + flag + " (or --input)");
    return inline_text;
}

json load_json(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + e.what());
    }
}

json envelope(const char* command)
{
    return {{"schema", kSchemaVersion}, {"command", command}};
}

void emit(const Options& o, const json& j, const std::string& text)
{
    if (o.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text << '\n';
}

Tuple parse_tuple(const Options& o, const Variety& v)
{
    Tuple t;
    for (const auto& a : o.args)
        t.push_back(parse_element(a, v));
    validate_tuple(t, v);
    return t;
}

int cmd_eval(const Options& o)
{
    Variety v = Variety::parse(o.variety);
    FreeTerm s = parse_term(text_argument(o, o.term, "--term"), v);
    Tuple t = parse_tuple(o, v);
    Element value = eval_at(s, t, v);
    json j = envelope("eval");
    j["variety"] = v.name();
    j["value"] = to_json(value);
    emit(o, j, to_string(value));
    return kExitOk;
}

int cmd_simplify(const Options& o)
{
    std::string text = text_argument(o, o.expr, "--expr");
    json j = envelope("simplify");
    j["kind"] = o.kind;
    std::string out;
    if (o.kind == "poly") {
        Poly p = parse_poly(text, o.m);
        j["value"] = to_json(p);
        out = to_string(p);
    } else if (o.kind == "diff") {
        DiffPoly f = parse_diffpoly(text, o.m);
        j["value"] = to_json(f);
        out = to_string(f);
    } else if (o.kind == "env") {
        EnvElement u = parse_env(text, o.m);
        j["value"] = to_json(u);
        out = to_string(u);
    } else if (o.kind == "vf") {
        VectorField u = parse_vector_field(text, o.m);
        j["value"] = to_json(u);
        out = to_string(u);
    } else if (o.kind == "term") {
        Variety v = Variety::parse(o.variety);
        FreeTerm t = parse_term(text, v);
        Element rep = represent(t, v, std::max<std::size_t>({1, t.max_generator(), o.n}));
        j["variety"] = v.name();
        j["term"] = to_string(t);
        j["value"] = to_json(rep);
        out = to_string(rep);
    } else {
        throw std::invalid_argument("unknown --kind '" + o.kind + "' (poly, diff, env, vf, term)");
    }
    j["text"] = out;
    emit(o, j, out);
    return kExitOk;
}

int cmd_bracket(const Options& o)
{
    Variety v = Variety::parse(o.variety);
    Element a = parse_element(o.left, v), b = parse_element(o.right, v);
    Element r = [&]() -> Element {
        if (v.kind == VarietyKind::Poisson) {
            if (o.lsym)
                throw std::invalid_argument("--lsym needs an L variety");
            return pbracket(std::get<PoissonElement>(a), std::get<PoissonElement>(b));
        }
        if (o.lsym) {
            if (v.kind != VarietyKind::LSymWitt)
                throw std::invalid_argument("--lsym needs an L variety");
            return lsym(std::get<VectorField>(a), std::get<VectorField>(b));
        }
        return wbracket(std::get<VectorField>(a), std::get<VectorField>(b));
    }();
    json j = envelope("bracket");
    j["variety"] = v.name();
    j["operation"] = o.lsym ? "lsym" : (v.kind == VarietyKind::Poisson ? "poisson_bracket" : "lie_bracket");
    j["value"] = to_json(r);
    emit(o, j, to_string(r));
    return kExitOk;
}

int cmd_identity(const Options& o)
{
    Variety v = Variety::parse(o.variety);
    FreeTerm t = parse_term(text_argument(o, o.term, "--term"), v);
    std::size_t n = std::max<std::size_t>(1, t.max_generator());
    validate(t, v, n);
    if (t.has_constants())
        throw std::invalid_argument("identities cannot contain constants");
    Element rep = represent(t, v, n);
    bool identity = is_zero(rep);
    json j = envelope("identity");
    j["variety"] = v.name();
    j["term"] = to_string(t);
    j["identity"] = identity;
    if (!identity)
        j["representation"] = to_json(rep);
    emit(o, j, identity ? "identity" : "not an identity: " + to_string(rep));
    return identity ? kExitOk : kExitNo;
}

int cmd_linearize(const Options& o)
{
    Variety v = Variety::parse(o.variety);
    FreeTerm t = parse_term(text_argument(o, o.term, "--term"), v);
    std::size_t n = std::max<std::size_t>({1, t.max_generator(), o.n});
    validate(t, v, n);
    std::vector<FreeTerm> parts = multilinearize(t, n);
    json j = envelope("linearize");
    j["variety"] = v.name();
    j["components"] = json::array();
    std::string text;
    for (const auto& p : parts) {
        j["components"].push_back(to_string(p));
        text += (text.empty() ? "" : "\n") + to_string(p);
    }
    emit(o, j, parts.empty() ? "0" : text);
    return kExitOk;
}

int cmd_separate(const Options& o)
{
    DiffPoly g = parse_diffpoly(text_argument(o, o.expr, "--expr"), o.m, o.n);
    Separation s = separate(g);
    json j = envelope("separate");
    j["leading"] = to_string(s.leading);
    j["targets"] = json::array();
    std::string text = "leading: " + to_string(s.leading);
    for (std::size_t i = 0; i < s.targets.size(); ++i) {
        j["targets"].push_back(to_string(s.targets[i]));
        text += "\ny" + std::to_string(i + 1) + " -> " + to_string(s.targets[i]);
    }
    j["witness"] = to_string(s.witness);
    text += "\nwitness: " + to_string(s.witness);
    emit(o, j, text);
    return kExitOk;
}

StructureConstants load_algebra(const std::string& spec)
{
    if (spec.size() >= 2 && spec[0] == 'M' && std::isdigit(static_cast<unsigned char>(spec[1])))
        return StructureConstants::matrix_algebra(std::stoul(spec.substr(1)));
    if (spec.size() >= 3 && spec.rfind("Tr", 0) == 0 && std::isdigit(static_cast<unsigned char>(spec[2])))
        return StructureConstants::upper_triangular(std::stoul(spec.substr(2)));
    return structure_constants_from_json(load_json(spec));
}

int cmd_flatten(const Options& o)
{
    StructureConstants alg = load_algebra(o.algebra);
    AlgTerm t = parse_alg_term(text_argument(o, o.term, "--term"), alg);
    std::size_t n = std::max<std::size_t>({1, t.max_unknown(), o.n});
    std::vector<Poly> s = flatten(t, alg, n);
    json j = envelope("flatten");
    j["dim"] = alg.dim();
    j["unknowns"] = n;
    j["coordinates"] = json::array();
    std::string text;
    for (std::size_t k = 0; k < s.size(); ++k) {
        j["coordinates"].push_back(to_string(s[k]));
        text += (k ? "\n" : "") + std::string("s") + std::to_string(k + 1) + " = " + to_string(s[k]);
    }
    emit(o, j, text);
    return kExitOk;
}

EqSystem load_system(const std::string& path)
{
    if (path.empty())
        throw std::invalid_argument("missing equation system file");
    return eqsystem_from_json(load_json(path));
}

int cmd_member(const Options& o)
{
    EqSystem s = load_system(o.system);
    Tuple t = parse_tuple(o, s.variety);
    bool in = member(s, t);
    json j = envelope("member");
    j["member"] = in;
    emit(o, j, in ? "member" : "not a member");
    return in ? kExitOk : kExitNo;
}

int cmd_equiv(const Options& o)
{
    EqSystem s = load_system(o.system), t = load_system(o.other);
    EquivOptions opts{o.deg, o.samples, o.seed};
    EquivVerdict verdict = equiv_sample(s, t, opts);
    json j = envelope("equiv");
    j["consistent"] = verdict.consistent;
    j["samples_checked"] = verdict.samples_checked;
    j["seed"] = o.seed;
    std::string text;
    if (verdict.consistent) {
        text = "consistent at this scale (" + std::to_string(verdict.samples_checked) + " samples)";
    } else {
        json w = json::array();
        text = "witness at sample " + std::to_string(verdict.sample_index) + " (in " +
               (verdict.in_first ? "first" : "second") + " system only):";
        for (const auto& e : *verdict.witness) {
            w.push_back(to_string(e));
            text += "\n  " + to_string(e);
        }
        j["witness"] = w;
        j["sample_index"] = verdict.sample_index;
        j["in_first"] = verdict.in_first;
    }
    emit(o, j, text);
    return kExitOk;
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("DIFFWITT_SEED");
    if (env == nullptr || *env == '\0')
        return 42;
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(env, &used);
        if (used != std::string(env).size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("DIFFWITT_SEED must be a non-negative integer, got '") + env + "'");
    }
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    try {
        o.seed = default_seed();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }

    CLI::App app{"Exact differential-algebra toolkit: Witt, left-symmetric Witt and Poisson algebras"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Emit a JSON document instead of text");

    auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Emit a JSON document instead of text"); };
    auto add_variety = [&](CLI::App* c) {
        c->add_option("--variety", o.variety, "L<m>, W<m> or P<m>")->capture_default_str();
    };

    auto* eval = app.add_subcommand("eval", "Evaluate a term with constants at a tuple");
    add_variety(eval);
    eval->add_option("--term", o.term, "Term in z1..zn");
    eval->add_option("--arg", o.args, "Tuple entry; repeat once per unknown");
    eval->add_option("--input", o.input, "Read the term from a file");

    auto* simplify = app.add_subcommand("simplify", "Print the canonical form of an expression");
    simplify->add_option("--kind", o.kind, "poly, diff, env, vf or term")->capture_default_str();
    simplify->add_option("--m", o.m, "Number of variables/derivations")->capture_default_str();
    simplify->add_option("--n", o.n, "Generator count for --kind term");
    add_variety(simplify);
    simplify->add_option("--expr", o.expr, "Expression text");
    simplify->add_option("--input", o.input, "Read the expression from a file");

    auto* bracket = app.add_subcommand("bracket", "Bracket two concrete elements");
    add_variety(bracket);
    bracket->add_option("--a", o.left, "Left operand")->required();
    bracket->add_option("--b", o.right, "Right operand")->required();
    bracket->add_flag("--lsym", o.lsym, "Left-symmetric product instead of the bracket (L only)");

    auto* identity = app.add_subcommand("identity", "Decide whether a term is an identity (exit 0) or not (exit 1)");
    add_variety(identity);
    identity->add_option("--term", o.term, "Term in z1..zn");
    identity->add_option("--input", o.input, "Read the term from a file");

    auto* linearize = app.add_subcommand("linearize", "Multilinear components of a term");
    add_variety(linearize);
    linearize->add_option("--term", o.term, "Term in z1..zn");
    linearize->add_option("--n", o.n, "Generator count");
    linearize->add_option("--input", o.input, "Read the term from a file");

    auto* sep = app.add_subcommand("separate", "Separating substitution for a multilinear differential polynomial");
    sep->add_option("--m", o.m, "Number of derivations")->capture_default_str();
    sep->add_option("--n", o.n, "Generator count");
    sep->add_option("--expr", o.expr, "Differential polynomial in y1..yn");
    sep->add_option("--input", o.input, "Read the polynomial from a file");

    auto* flat = app.add_subcommand("flatten", "Coordinate equations of a term over a finite-dimensional algebra");
    flat->add_option("--algebra", o.algebra, "M<k>, Tr<k> or a structure-constant JSON file")->capture_default_str();
    flat->add_option("--term", o.term, "Term in X1..Xn and e1..edim");
    flat->add_option("--n", o.n, "Number of unknowns");
    flat->add_option("--input", o.input, "Read the term from a file");

    auto* mem = app.add_subcommand("member", "Test whether a tuple lies in the zero set (exit 0) or not (exit 1)");
    mem->add_option("--system", o.system, "Equation system JSON file")->required();
    mem->add_option("--arg", o.args, "Tuple entry; repeat once per unknown");

    auto* equiv = app.add_subcommand("equiv", "Sample-based comparison of two zero sets");
    equiv->add_option("--system", o.system, "First equation system JSON file")->required();
    equiv->add_option("--other", o.other, "Second equation system JSON file")->required();
    equiv->add_option("--deg", o.deg, "Coefficient degree bound")->capture_default_str();
    equiv->add_option("--samples", o.samples, "Number of random tuples")->capture_default_str();
    equiv->add_option("--seed", o.seed, "Seed (default 42 or $DIFFWITT_SEED)");

    for (auto* c : {eval, simplify, bracket, identity, linearize, sep, flat, mem, equiv})
        add_json(c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (*eval) return cmd_eval(o);
        if (*simplify) return cmd_simplify(o);
        if (*bracket) return cmd_bracket(o);
        if (*identity) return cmd_identity(o);
        if (*linearize) return cmd_linearize(o);
        if (*sep) return cmd_separate(o);
        if (*flat) return cmd_flatten(o);
        if (*mem) return cmd_member(o);
        if (*equiv) return cmd_equiv(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
