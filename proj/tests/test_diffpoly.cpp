#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "diffwitt/diffpoly.hpp"
#include "diffwitt/parse.hpp"
#include "support/random_values.hpp"

using namespace diffwitt;
using namespace diffwitt::testing;

namespace {

DerivOp op(std::vector<std::uint32_t> v) { return DerivOp(std::move(v)); }

DiffPoly y(std::uint32_t g, std::vector<std::uint32_t> theta) { return DiffPoly::indeterminate(g, op(std::move(theta))); }

DiffPoly xs(std::size_t m, std::size_t i) { return DiffPoly::constant(Poly::variable(m, i)); }

/// theta(p) computed by iterated partial derivatives of the coefficient ring.
Poly theta_of(const Poly& p, const DerivOp& theta)
{
    Poly r = p;
    for (std::size_t k = 0; k < theta.size(); ++k)
        for (std::uint32_t t = 0; t < theta.index[k]; ++t)
            r = partial(r, k + 1);
    return r;
}

/// beta(u): concatenated multi-indices of y_1..y_n.
std::vector<std::uint32_t> beta(const DiffMonomial& u)
{
    std::vector<std::uint32_t> out;
    for (const auto& f : u.factors())
        out.insert(out.end(), f.theta.index.begin(), f.theta.index.end());
    return out;
}

} // namespace

TEST_CASE("dp_derive")
{
    CHECK(derive(y(1, {0, 0}), 1) == y(1, {1, 0}));
    CHECK(derive(y(1, {0, 0}) * y(2, {0, 0}), 1) == y(1, {1, 0}) * y(2, {0, 0}) + y(1, {0, 0}) * y(2, {1, 0}));
    DiffPoly f = xs(1, 1) * y(1, {0});
    CHECK(derive(f, 1) == y(1, {0}) + xs(1, 1) * y(1, {1}));
    CHECK_THROWS_AS(derive(f, 2), std::out_of_range);
}

TEST_CASE("dp_theta_apply")
{
    DiffPoly f = xs(2, 1) * y(1, {0, 1}) + y(2, {0, 0});
    CHECK(apply_operator(f, DerivOp::identity(2)) == f);
    CHECK(apply_operator(y(1, {0, 0}), op({2, 0})) == y(1, {2, 0}));
    CHECK(apply_operator(xs(2, 1) * xs(2, 2), op({1, 1})) == DiffPoly::scalar(2, 1));
    CHECK(apply_operator(f, op({1, 1})) == y(1, {0, 2}) + xs(2, 1) * y(1, {1, 2}) + y(2, {1, 1}));
}

TEST_CASE("dp_substitute")
{
    DiffPoly f = y(1, {1});
    DiffPoly target = DiffPoly::constant(pow(Poly::variable(1, 1), 2));
    std::vector<DiffPoly> targets{target};
    DiffPoly img = substitute(f, targets);
    CHECK(img == DiffPoly::constant(theta_of(pow(Poly::variable(1, 1), 2), op({1}))));
    CHECK(img == 2 * xs(1, 1));

    std::vector<DiffPoly> rename{y(2, {0})};
    CHECK(substitute(y(1, {0}), rename) == y(2, {0}));

    DiffPoly zero = y(1, {1}) * y(2, {0}) - y(2, {0}) * y(1, {1});
    CHECK(zero.is_zero());

    std::vector<DiffPoly> wrong;
    CHECK_THROWS_AS(substitute(y(1, {0}), wrong), std::invalid_argument);
}

TEST_CASE("substitution is a differential homomorphism")
{
    Gen gen(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = static_cast<std::size_t>(gen.integer(1, 2));
        DiffPoly f = gen.diffpoly(m, 2, 2, 1), g = gen.diffpoly(m, 2, 2, 1);
        std::vector<DiffPoly> targets{gen.diffpoly(m, 1, 2, 1).with_gen_count(1), gen.diffpoly(m, 1, 2, 1).with_gen_count(1)};
        f = f.with_gen_count(2);
        g = g.with_gen_count(2);
        CHECK(substitute(f * g, targets) == substitute(f, targets) * substitute(g, targets));
        CHECK(substitute(f + g, targets) == substitute(f, targets) + substitute(g, targets));
        std::size_t k = static_cast<std::size_t>(gen.integer(1, static_cast<int>(m)));
        CHECK(substitute(derive(f, k), targets) == derive(substitute(f, targets), k));
    }
}

TEST_CASE("derivations commute and obey Leibniz")
{
    Gen gen(3);
    for (int trial = 0; trial < 100; ++trial) {
        DiffPoly f = gen.diffpoly(2, 2, 3, 2), g = gen.diffpoly(2, 2, 3, 2);
        CHECK(derive(derive(f, 1), 2) == derive(derive(f, 2), 1));
        CHECK(derive(f * g, 1) == derive(f, 1) * g + f * derive(g, 1));
    }
}

TEST_CASE("x_theta")
{
    CHECK(x_theta(op({0, 0})) == Poly::constant(2, 1));
    Exponent e{2, 1};
    CHECK(x_theta(op({2, 1})) == Poly::monomial(e, make_rational(1, 2)));
    CHECK(x_theta(op({3})) == Poly::monomial({3}, make_rational(1, 6)));
}

TEST_CASE("x_theta kernel property")
{
    // theta(X(theta)) = 1 and theta1(X(theta)) = 0 for theta1 != theta of the
    // same or smaller order; larger orders also vanish.
    std::vector<DerivOp> ops;
    for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; a + b <= 3; ++b)
            ops.push_back(op({a, b}));
    for (const auto& t : ops) {
        Poly xt = x_theta(t);
        for (const auto& t1 : ops) {
            Poly img = theta_of(xt, t1);
            if (t1 == t)
                CHECK(img == Poly::constant(2, 1));
            else if (t1.order() >= t.order())
                CHECK(img.is_zero());
        }
    }
}

TEST_CASE("beta_compare")
{
    DiffMonomial u({{1, op({0})}, {2, op({0})}});
    DiffMonomial v({{1, op({1})}, {2, op({0})}});
    CHECK(beta_compare(u, v) == std::strong_ordering::less);
    CHECK(beta_compare(u, u) == std::strong_ordering::equal);
    DiffMonomial a({{1, op({0, 1})}, {2, op({0, 0})}});
    DiffMonomial b({{1, op({1, 0})}, {2, op({0, 0})}});
    CHECK(beta(a) < beta(b));
    CHECK(beta_compare(a, b) == std::strong_ordering::less);
    DiffMonomial sq({{1, op({0})}, {1, op({1})}});
    CHECK_THROWS_AS(beta_compare(sq, u), std::invalid_argument);
}

TEST_CASE("separate examples")
{
    {
        Separation s = separate(y(1, {1}));
        REQUIRE(s.targets.size() == 1);
        CHECK(s.targets[0] == Poly::variable(1, 1));
        CHECK(s.witness == Poly::constant(1, 1));
    }
    {
        Separation s = separate(5 * (y(1, {0}) * y(2, {0})));
        REQUIRE(s.targets.size() == 2);
        CHECK(s.targets[0] == Poly::constant(1, 1));
        CHECK(s.targets[1] == Poly::constant(1, 1));
        CHECK(s.witness == Poly::constant(1, 5));
    }
    {
        DiffPoly g = y(1, {1, 0}) * y(2, {0, 0}) - y(1, {0, 0}) * y(2, {1, 0});
        Separation s = separate(g);
        CHECK(s.leading == DiffMonomial({{1, op({0, 0})}, {2, op({1, 0})}}));
        CHECK(s.targets[0] == Poly::constant(2, 1));
        CHECK(s.targets[1] == Poly::variable(2, 1));
        CHECK(s.witness == Poly::constant(2, -1));
    }
}

TEST_CASE("separate preconditions")
{
    CHECK_THROWS_WITH_AS(separate(DiffPoly(1, 1)), doctest::Contains("zero input"), std::invalid_argument);
    CHECK_THROWS_AS(separate(y(1, {0}) * y(1, {1})), std::invalid_argument);
    CHECK_THROWS_AS(separate(y(1, {0}) + y(1, {0}) * y(2, {0})), std::invalid_argument);
    CHECK_THROWS_AS(separate(xs(1, 1) * y(1, {0})), std::invalid_argument);
}

TEST_CASE("separate against a brute-force beta oracle")
{
    Gen gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = static_cast<std::size_t>(gen.integer(1, 2));
        std::size_t n = static_cast<std::size_t>(gen.integer(1, 3));
        DiffPoly g = gen.multilinear(m, n, 3);
        auto best = std::min_element(g.terms().begin(), g.terms().end(),
                                     [](const auto& a, const auto& b) { return beta(a.first) < beta(b.first); });
        Separation s = separate(g);
        CHECK(s.leading == best->first);
        CHECK(s.witness == best->second);
        CHECK_FALSE(s.witness.is_zero());
        // Independent evaluation: each monomial maps to prod_i theta_i(X(theta*_i)).
        Poly image(m);
        for (const auto& [u, coeff] : g.terms()) {
            Poly term = coeff;
            for (std::size_t i = 0; i < u.factors().size(); ++i)
                term *= theta_of(x_theta(best->first.factors()[i].theta), u.factors()[i].theta);
            image += term;
        }
        CHECK(image == s.witness);
    }
}

TEST_CASE("diffpoly printing")
{
    DiffPoly f = y(1, {1, 0}) * y(2, {0, 0}) + 3 * (xs(2, 2) * y(1, {0, 0}));
    CHECK(to_string(f) == to_string(parse_diffpoly(to_string(f), 2)));
    CHECK(parse_diffpoly(to_string(f), 2) == f);
    CHECK(to_string(DiffPoly(2, 0)) == "0");
    CHECK(parse_diffpoly("y1^(1,0)*y2 - y2*y1^(1,0)", 2).is_zero());
}
