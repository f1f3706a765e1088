#include <doctest.h>

#include <stdexcept>

#include "diffwitt/json_io.hpp"
#include "diffwitt/parse.hpp"
#include "support/random_values.hpp"

using namespace diffwitt;
using namespace diffwitt::testing;

namespace {

const Variety L1{VarietyKind::LSymWitt, 1};
const Variety W1{VarietyKind::Witt, 1};
const Variety W2{VarietyKind::Witt, 2};
const Variety P1{VarietyKind::Poisson, 1};

} // namespace

TEST_CASE("parse polynomials")
{
    Poly x1 = Poly::variable(2, 1), x2 = Poly::variable(2, 2);
    CHECK(parse_poly("x1^2 + 2", 2) == x1 * x1 + Poly::constant(2, 2));
    CHECK(parse_poly("(x1 + x2)^2", 2) == x1 * x1 + Poly::constant(2, 2) * x1 * x2 + x2 * x2);
    CHECK(parse_poly("x1/2 - 3/4", 2) == make_rational(1, 2) * x1 - Poly::constant(2, make_rational(3, 4)));
    CHECK(parse_poly("-x1*-x2", 2) == x1 * x2);
    CHECK(parse_poly("x1 \xC2\xB7 x2 \xE2\x88\x92 1", 2) == x1 * x2 - Poly::constant(2, 1));
    CHECK(to_string(parse_poly("x1^2+2", 1)) == "x1^2 + 2");
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_term("[z1, z2", W1);
        FAIL("expected a syntax error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 8);
    }
    try {
        parse_poly("x1 +\n  x3", 2);
        FAIL("expected a range error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(std::string(e.what()).find("2:3:") == 0);
    }
    CHECK_THROWS_AS(parse_poly("x0", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 / x2", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 $", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_diffpoly("y1^(1,0,0)", 2), ParseError);
    CHECK_THROWS_AS(parse_diffpoly("x1^(1,0)", 2), ParseError);
    CHECK_THROWS_AS(parse_term("z1 o z2 o z3", L1), ParseError);
    CHECK_THROWS_AS(parse_term("2", W1), ParseError);
    CHECK_THROWS_AS(parse_term("V(x1; x2)", W1), ParseError);
    CHECK_THROWS_AS(parse_vector_field("x1*D1*D1", 1), ParseError);
    CHECK_THROWS_AS(parse_env("D3", 2), ParseError);
}

TEST_CASE("parse terms")
{
    FreeTerm t = parse_term("(z1 o z2) o z3", L1);
    CHECK(t.op() == FreeTerm::Op::LSymProd);
    CHECK(t.left().op() == FreeTerm::Op::LSymProd);
    CHECK(t.right().generator_index() == 3);
    CHECK(parse_term("(z1 \xE2\x88\x98 z2) \xE2\x88\x98 z3", L1) == t);
    CHECK(parse_term("2*z1 o z2", L1) == parse_term("(2*z1) o z2", L1));
    FreeTerm pc = parse_term("{z1, x2}", P1);
    CHECK(pc.right().op() == FreeTerm::Op::Constant);
    CHECK(parse_term("{z1, P(x2)}", P1) == pc);
    CHECK(parse_term("[z1, V(x1^2)]", W1).right().op() == FreeTerm::Op::Constant);
    CHECK(parse_term("z1 - z1", W1) == FreeTerm::generator(1) - FreeTerm::generator(1));
    CHECK(parse_term("0", W1).op() == FreeTerm::Op::Zero);
}

TEST_CASE("parse elements")
{
    Element e = parse_element("V(x1^2)", W1);
    CHECK(std::get<VectorField>(e) == witt_basis(1));
    CHECK(std::get<VectorField>(parse_element("x1^2*D1", W1)) == witt_basis(1));
    Element p = parse_element("x1*x2", P1);
    CHECK(std::get<PoissonElement>(p).value() == DiffPoly::constant(Poly::variable(2, 1) * Poly::variable(2, 2)));
    CHECK(parse_element("P(x1*x2)", P1) == p);
    CHECK(to_string(parse_element("V(0; 0)", W2)) == "V(0; 0)");
}

TEST_CASE("canonical printing is insensitive to input order")
{
    CHECK(to_string(parse_poly("2 + x1^2", 1)) == to_string(parse_poly("x1^2 + 2", 1)));
    CHECK(to_string(parse_diffpoly("y2*y1^(1,0) + x1", 2)) == to_string(parse_diffpoly("x1 + y1^(1,0)*y2", 2)));
}

TEST_CASE("json round-trips")
{
    Gen gen(61);
    for (int trial = 0; trial < 30; ++trial) {
        Poly p = gen.poly(2, 3);
        CHECK(poly_from_json(json::parse(to_json(p).dump())) == p);
        DiffPoly f = gen.diffpoly(2, 2, 2, 2);
        CHECK(diffpoly_from_json(to_json(f)) == f);
        EnvElement u = gen.env(2, 1, 2, 2);
        CHECK(env_from_json(to_json(u)) == u);
        VectorField v = gen.vector_field(2, 1, 2, 1);
        CHECK(vector_field_from_json(to_json(v)) == v);
        Element pe = PoissonElement(gen.diffpoly(2, 0, 3, 0));
        CHECK(element_from_json(to_json(pe)) == pe);
        Element ve = gen.vector_field(1, 0, 3, 0);
        CHECK(element_from_json(to_json(ve)) == ve);
    }
    StructureConstants m2 = StructureConstants::matrix_algebra(2);
    CHECK(structure_constants_from_json(to_json(m2)).table() == m2.table());
    StructureConstants half({{{make_rational(1, 2)}}});
    CHECK(to_json(half)["gamma"][0][0][0] == "1/2");
    CHECK(structure_constants_from_json(to_json(half)).table() == half.table());
}

TEST_CASE("equation system json")
{
    json j = json::parse(R"({"schema": 1, "variety": "W1", "n": 1, "equations": ["[z1, V(x1)]"]})");
    EqSystem s = eqsystem_from_json(j);
    CHECK(s.variety == W1);
    CHECK(s.equations.size() == 1);
    json back = to_json(s);
    CHECK(back["schema"] == 1);
    CHECK(back == j);
    CHECK_THROWS_AS(eqsystem_from_json(json::parse(R"({"schema": 2, "variety": "W1", "n": 1, "equations": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(eqsystem_from_json(json::parse(R"({"schema": 1, "variety": "W1", "n": 1, "equations": ["[z1, z2]"]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(eqsystem_from_json(json::parse(R"({"schema": 1, "variety": "W1", "equations": []})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(json::parse(R"({"m": 2, "terms": [{"c": "1", "e": [1]}]})")), std::invalid_argument);
}
