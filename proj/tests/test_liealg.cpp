#include <doctest.h>

#include <stdexcept>

#include "diffwitt/liealg.hpp"
#include "diffwitt/parse.hpp"
#include "support/random_values.hpp"

using namespace diffwitt;
using namespace diffwitt::testing;

namespace {

VectorField field1(const Poly& f) { return VectorField::along(DiffPoly::constant(f), 1); }

Poly x(std::size_t m, std::size_t i) { return Poly::variable(m, i); }

PoissonElement P(const Poly& p) { return PoissonElement(DiffPoly::constant(p)); }

VectorField associator(const VectorField& u, const VectorField& v, const VectorField& w)
{
    return lsym(lsym(u, v), w) - lsym(u, lsym(v, w));
}

} // namespace

TEST_CASE("lsym")
{
    Poly x1 = x(1, 1);
    CHECK(lsym(field1(x1), field1(x1 * x1)) == field1(Poly::constant(1, 2) * x1 * x1));
    VectorField d1 = VectorField::along(DiffPoly::scalar(2, 1), 1);
    VectorField d2 = VectorField::along(DiffPoly::scalar(2, 1), 2);
    CHECK(lsym(d1, d2).is_zero());
    VectorField u = field1(x1), v = field1(x1 * x1), w = field1(pow(x1, 3));
    CHECK(associator(u, v, w) == associator(v, u, w));
}

TEST_CASE("wbracket")
{
    Poly x1 = x(1, 1);
    VectorField u = field1(x1);
    CHECK(wbracket(u, u).is_zero());
    CHECK(wbracket(field1(x1), field1(x1 * x1)) == field1(x1 * x1));
    CHECK(wbracket(field1(Poly::constant(1, 1)), field1(x1)) == field1(Poly::constant(1, 1)));
}

TEST_CASE("pbracket")
{
    Poly x1 = x(2, 1), x2 = x(2, 2);
    CHECK(pbracket(P(x1), P(x2)) == P(Poly::constant(2, 1)));
    CHECK(pbracket(P(x1 * x2), P(x1 * x2)).is_zero());
    CHECK(pbracket(P(x1 * x1), P(x2)) == P(Poly::constant(2, 2) * x1));
    CHECK_THROWS_AS(PoissonElement(DiffPoly::scalar(3, 1)), std::invalid_argument);
}

TEST_CASE("witt_basis")
{
    CHECK(witt_basis(-1) == field1(Poly::constant(1, 1)));
    CHECK(witt_basis(0) == field1(x(1, 1)));
    CHECK(wbracket(witt_basis(1), witt_basis(2)) == field1(pow(x(1, 1), 4)));
    CHECK_THROWS_AS(witt_basis(-2), std::invalid_argument);
    for (int i = -1; i <= 5; ++i)
        for (int j = -1; j <= 5; ++j) {
            // Oracle: x^{i+1} d(x^{j+1}) - x^{j+1} d(x^{i+1}) by the power rule.
            Poly a = pow(x(1, 1), static_cast<std::uint32_t>(i + 1));
            Poly b = pow(x(1, 1), static_cast<std::uint32_t>(j + 1));
            Poly expected = a * partial(b, 1) - b * partial(a, 1);
            CHECK(wbracket(witt_basis(i), witt_basis(j)) == field1(expected));
        }
}

TEST_CASE("vector field validation")
{
    CHECK_THROWS_AS(VectorField(std::vector<DiffPoly>{}), std::invalid_argument);
    CHECK_THROWS_AS(VectorField(std::vector<DiffPoly>{DiffPoly(2, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(lsym(VectorField::zero(1), VectorField::zero(2)), std::invalid_argument);
    CHECK(to_string(VectorField::zero(2)) == "V(0; 0)");
}

TEST_CASE("left symmetry, Jacobi and Leibniz on random elements")
{
    Gen gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t m = static_cast<std::size_t>(gen.integer(1, 2));
        VectorField u = gen.vector_field(m, 2, 3, 2), v = gen.vector_field(m, 2, 3, 2), w = gen.vector_field(m, 2, 3, 2);
        CHECK(associator(u, v, w) == associator(v, u, w));
        CHECK(wbracket(u, v) == -wbracket(v, u));
        CHECK((wbracket(wbracket(u, v), w) + wbracket(wbracket(v, w), u) + wbracket(wbracket(w, u), v)).is_zero());

        PoissonElement f(gen.diffpoly(2 * m, 1, 2, 1)), g(gen.diffpoly(2 * m, 1, 2, 1)), h(gen.diffpoly(2 * m, 1, 2, 1));
        CHECK(pbracket(f, g) == -pbracket(g, f));
        CHECK((pbracket(pbracket(f, g), h) + pbracket(pbracket(g, h), f) + pbracket(pbracket(h, f), g)).is_zero());
        CHECK(pbracket(f * g, h) == f * pbracket(g, h) + pbracket(f, h) * g);
    }
}

TEST_CASE("vector field printing round-trips")
{
    Gen gen(29);
    for (int trial = 0; trial < 30; ++trial) {
        VectorField u = gen.vector_field(2, 2, 2, 2);
        CHECK(parse_vector_field(to_string(u), 2) == u);
    }
    CHECK(parse_vector_field("x1*D1 + x2^2*D2", 2) ==
          VectorField({DiffPoly::constant(x(2, 1)), DiffPoly::constant(pow(x(2, 2), 2))}));
}
