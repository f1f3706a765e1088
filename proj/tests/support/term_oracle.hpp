#pragma once

// Direct evaluation of free terms on concrete elements, bypassing the free
// representation and the substitution homomorphism.

#include <stdexcept>
#include <vector>

#include "diffwitt/freealg.hpp"
#include "random_values.hpp"

namespace diffwitt::testing {

inline Element evaluate_directly(const FreeTerm& t, const Variety& v, const std::vector<Element>& args)
{
    using Op = FreeTerm::Op;
    const std::size_t d = v.derivations();
    auto zero = [&]() -> Element {
        if (v.kind == VarietyKind::Poisson)
            return PoissonElement(DiffPoly(d, 0));
        return VectorField::zero(d);
    };
    auto vf = [](const Element& e) -> const VectorField& { return std::get<VectorField>(e); };
    auto pe = [](const Element& e) -> const PoissonElement& { return std::get<PoissonElement>(e); };
    switch (t.op()) {
    case Op::Zero:
        return zero();
    case Op::Generator:
        return args.at(t.generator_index() - 1);
    case Op::Constant:
        return t.constant_value();
    case Op::Sum: {
        Element a = evaluate_directly(t.left(), v, args), b = evaluate_directly(t.right(), v, args);
        if (v.kind == VarietyKind::Poisson)
            return pe(a) + pe(b);
        return vf(a) + vf(b);
    }
    case Op::Scale: {
        Element a = evaluate_directly(t.left(), v, args);
        if (v.kind == VarietyKind::Poisson)
            return t.factor() * pe(a);
        return t.factor() * vf(a);
    }
    case Op::LSymProd:
        return lsym(vf(evaluate_directly(t.left(), v, args)), vf(evaluate_directly(t.right(), v, args)));
    case Op::LieBracket:
        return wbracket(vf(evaluate_directly(t.left(), v, args)), vf(evaluate_directly(t.right(), v, args)));
    case Op::PoissonMul:
        return pe(evaluate_directly(t.left(), v, args)) * pe(evaluate_directly(t.right(), v, args));
    case Op::PoissonBracket:
        return pbracket(pe(evaluate_directly(t.left(), v, args)), pe(evaluate_directly(t.right(), v, args)));
    }
    throw std::logic_error("unknown operation");
}

/// Random concrete element of L_m / W_m / P_m.
inline Element random_element(Gen& gen, const Variety& v, std::uint32_t degree)
{
    const std::size_t d = v.derivations();
    if (v.kind == VarietyKind::Poisson)
        return PoissonElement(DiffPoly::constant(gen.poly(d, degree, 4)));
    std::vector<DiffPoly> comps;
    for (std::size_t k = 0; k < d; ++k)
        comps.push_back(DiffPoly::constant(gen.poly(d, degree, 4)));
    return VectorField(std::move(comps));
}

/// Searches `samples` random tuples for a nonzero value of t.
inline bool vanishes_on_samples(const FreeTerm& t, const Variety& v, std::size_t n, Gen& gen, int samples)
{
    for (int s = 0; s < samples; ++s) {
        std::vector<Element> args;
        for (std::size_t i = 0; i < n; ++i)
            args.push_back(random_element(gen, v, 3));
        if (!is_zero(evaluate_directly(t, v, args)))
            return false;
    }
    return true;
}

} // namespace diffwitt::testing
