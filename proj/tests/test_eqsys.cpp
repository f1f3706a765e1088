#include <doctest.h>

#include <stdexcept>

#include "diffwitt/eqsys.hpp"
#include "diffwitt/parse.hpp"
#include "support/random_values.hpp"
#include "support/term_oracle.hpp"

using namespace diffwitt;
using namespace diffwitt::testing;

namespace {

const Variety L1{VarietyKind::LSymWitt, 1};
const Variety W1{VarietyKind::Witt, 1};
const Variety W2{VarietyKind::Witt, 2};
const Variety P1{VarietyKind::Poisson, 1};

FreeTerm z(std::size_t i) { return FreeTerm::generator(i); }

FreeTerm bracket_with_e0() { return FreeTerm::lie(z(1), FreeTerm::constant(witt_basis(0))); }

EqSystem system_of(const Variety& v, std::size_t n, std::vector<FreeTerm> eqs)
{
    return EqSystem{v, n, std::move(eqs)};
}

/// Components of s with y_ij -> j-th coefficient of a_i, evaluated by
/// plugging polynomials into each indeterminate directly.
bool components_vanish(const std::vector<DiffPoly>& comps, const Tuple& t)
{
    std::vector<DiffPoly> targets;
    for (const auto& a : t)
        for (const auto& c : std::get<VectorField>(a).components())
            targets.push_back(c.with_gen_count(0));
    for (const auto& c : comps) {
        DiffPoly f = c.with_gen_count(targets.size());
        if (!substitute(f, targets).is_zero())
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("eval_at")
{
    Tuple at_e0{witt_basis(0)};
    CHECK(is_zero(eval_at(bracket_with_e0(), at_e0, W1)));
    Tuple at_e1{witt_basis(1)};
    CHECK(std::get<VectorField>(eval_at(bracket_with_e0(), at_e1, W1)) == -witt_basis(1));

    FreeTerm s = FreeTerm::poisson_bracket(z(1), FreeTerm::constant(PoissonElement(DiffPoly::constant(Poly::variable(2, 2)))));
    Tuple at_x1{PoissonElement(DiffPoly::constant(Poly::variable(2, 1)))};
    CHECK(std::get<PoissonElement>(eval_at(s, at_x1, P1)).value() == DiffPoly::scalar(2, 1));
}

TEST_CASE("eval_at agrees with direct evaluation")
{
    Gen gen(53);
    for (const Variety& v : {L1, W2, P1}) {
        std::vector<FreeTerm::Op> ops;
        if (v.kind == VarietyKind::LSymWitt)
            ops = {FreeTerm::Op::LSymProd, FreeTerm::Op::LieBracket};
        else if (v.kind == VarietyKind::Witt)
            ops = {FreeTerm::Op::LieBracket};
        else
            ops = {FreeTerm::Op::PoissonBracket, FreeTerm::Op::PoissonMul};
        for (int trial = 0; trial < 20; ++trial) {
            FreeTerm s = gen.term(ops, 2, 3) + FreeTerm::binary(ops[0], z(1), FreeTerm::constant(random_element(gen, v, 2)));
            Tuple t{random_element(gen, v, 2), random_element(gen, v, 2)};
            CHECK(eval_at(s, t, v) == evaluate_directly(s, v, t));
        }
    }
}

TEST_CASE("componentize")
{
    auto c = componentize(z(1), W2, 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == DiffPoly::indeterminate(1, DerivOp::identity(2)));
    CHECK(c[1] == DiffPoly::indeterminate(2, DerivOp::identity(2)));
    auto p = componentize(FreeTerm::lsym(z(1), z(2)), L1, 2);
    REQUIRE(p.size() == 1);
    CHECK(p[0] == DiffPoly::indeterminate(1, DerivOp({0})) * DiffPoly::indeterminate(2, DerivOp({1})));
    for (const auto& k : componentize(FreeTerm::zero(), W2, 1))
        CHECK(k.is_zero());
    CHECK_THROWS_AS(componentize(z(1), P1, 1), std::invalid_argument);
}

TEST_CASE("componentization: eval_at zero iff all components vanish")
{
    Gen gen(59);
    int zeros = 0;
    for (int trial = 0; trial < 40; ++trial) {
        FreeTerm s = gen.term({FreeTerm::Op::LieBracket}, 2, 3);
        Tuple t{random_element(gen, W2, 1), random_element(gen, W2, 1)};
        if (trial % 4 == 0)
            t[1] = t[0];
        bool value_zero = is_zero(eval_at(s, t, W2));
        zeros += value_zero;
        CHECK(value_zero == components_vanish(componentize(s, W2, 2), t));
    }
    CHECK(zeros > 0);
}

TEST_CASE("member")
{
    EqSystem empty = system_of(W1, 1, {});
    CHECK(member(empty, Tuple{witt_basis(3)}));
    EqSystem s = system_of(W1, 1, {bracket_with_e0()});
    CHECK(member(s, Tuple{witt_basis(0)}));
    CHECK_FALSE(member(s, Tuple{witt_basis(1)}));
    CHECK_THROWS_AS(member(s, Tuple{}), std::invalid_argument);
    CHECK_THROWS_AS(member(s, Tuple{PoissonElement(DiffPoly::scalar(2, 1))}), std::invalid_argument);
    VectorField with_y({DiffPoly::indeterminate(1, DerivOp({0}))});
    CHECK_THROWS_AS(member(s, Tuple{with_y}), std::invalid_argument);
}

TEST_CASE("equiv_sample")
{
    FreeTerm s = bracket_with_e0();
    EquivOptions opts;
    auto scaled = equiv_sample(system_of(W1, 1, {s}), system_of(W1, 1, {s, Rational(2) * s}), opts);
    CHECK(scaled.consistent);
    CHECK(scaled.samples_checked == opts.samples);

    auto differ = equiv_sample(system_of(W1, 1, {s}), system_of(W1, 1, {}), opts);
    REQUIRE_FALSE(differ.consistent);
    REQUIRE(differ.witness.has_value());
    CHECK_FALSE(differ.in_first);
    CHECK_FALSE(member(system_of(W1, 1, {s}), *differ.witness));

    auto same = equiv_sample(system_of(W1, 1, {s}), system_of(W1, 1, {s}), opts);
    CHECK(same.consistent);

    CHECK_THROWS_AS(equiv_sample(system_of(W1, 1, {s}), system_of(L1, 1, {}), opts), std::invalid_argument);
}

TEST_CASE("random tuples are reproducible per index")
{
    Tuple a = random_tuple(W2, 2, 2, 42, 5);
    Tuple b = random_tuple(W2, 2, 2, 42, 5);
    Tuple c = random_tuple(W2, 2, 2, 43, 5);
    CHECK(a == b);
    CHECK(a != c);
    CHECK_NOTHROW(validate_tuple(a, W2));
    Tuple p = random_tuple(P1, 1, 3, 7, 0);
    CHECK_NOTHROW(validate_tuple(p, P1));
    Poly value = std::get<PoissonElement>(p[0]).value().constant_part();
    for (const auto& [e, coeff] : value.terms()) {
        CHECK(total_degree(e) <= 3);
        CHECK(coeff >= -3);
        CHECK(coeff <= 3);
    }
}
