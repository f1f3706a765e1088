#include "diffwitt/eqsys.hpp"

#include <random>
#include <stdexcept>

namespace diffwitt {

void validate_tuple(const Tuple& t, const Variety& v)
{
    for (std::size_t i = 0; i < t.size(); ++i) {
        const auto& e = t[i];
        bool poisson = std::holds_alternative<PoissonElement>(e);
        if (poisson != (v.kind == VarietyKind::Poisson))
            throw std::invalid_argument("tuple entry " + std::to_string(i + 1) + " does not belong to " + v.name());
        std::size_t d = std::visit([](const auto& x) { return x.derivations(); }, e);
        if (d != v.derivations())
            throw std::invalid_argument("tuple entry " + std::to_string(i + 1) + " has " + std::to_string(d) +
                                        " derivations, " + v.name() + " needs " + std::to_string(v.derivations()));
        bool y_free = poisson ? std::get<PoissonElement>(e).value().is_y_free()
                              : std::get<VectorField>(e).is_y_free();
        if (!y_free)
            throw std::invalid_argument("tuple entry " + std::to_string(i + 1) +
                                        " contains differential indeterminates");
    }
}

Element eval_at(const FreeTerm& s, const Tuple& t, const Variety& v)
{
    validate_tuple(t, v);
    const std::size_t n = t.size();
    if (s.max_generator() > n)
        throw std::invalid_argument("term uses z" + std::to_string(s.max_generator()) + " but the tuple has " +
                                    std::to_string(n) + " entries");
    std::vector<DiffPoly> targets;
    for (const auto& e : t) {
        if (v.kind == VarietyKind::Poisson) {
            targets.push_back(std::get<PoissonElement>(e).value().with_gen_count(0));
        } else {
            for (const auto& c : std::get<VectorField>(e).components())
                targets.push_back(c.with_gen_count(0));
        }
    }

    Element rep = represent(s, v, n);
    auto image = [&](const DiffPoly& f) {
        if (f.gen_count() != targets.size())
            throw std::invalid_argument("equation constants must not contain differential indeterminates");
        return substitute(f, targets);
    };
    if (v.kind == VarietyKind::Poisson)
        return PoissonElement(image(std::get<PoissonElement>(rep).value()));
    std::vector<DiffPoly> out;
    for (const auto& c : std::get<VectorField>(rep).components())
        out.push_back(image(c));
    return VectorField(std::move(out));
}

std::vector<DiffPoly> componentize(const FreeTerm& s, const Variety& v, std::size_t n)
{
    if (v.kind == VarietyKind::Poisson)
        throw std::invalid_argument("Poisson elements are already scalar; use represent");
    return std::get<VectorField>(represent(s, v, n)).components();
}

bool member(const EqSystem& system, const Tuple& t)
{
    if (t.size() != system.n)
        throw std::invalid_argument("arity mismatch: system has " + std::to_string(system.n) +
                                    " unknowns, tuple has " + std::to_string(t.size()) + " entries");
    for (const auto& s : system.equations)
        if (!is_zero(eval_at(s, t, system.variety)))
            return false;
    return true;
}

namespace {

// Every exponent of total degree <= bound in `vars` variables, in a fixed order.
void exponents_up_to(std::size_t vars, std::uint32_t bound, Exponent& cur, std::size_t pos,
                     std::vector<Exponent>& out)
{
    if (pos == vars) {
        out.push_back(cur);
        return;
    }
    std::uint32_t used = total_degree(cur);
    for (std::uint32_t k = 0; used + k <= bound; ++k) {
        cur[pos] = k;
        exponents_up_to(vars, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

Poly random_poly(std::size_t vars, const std::vector<Exponent>& monomials, std::mt19937_64& rng)
{
    Poly p(vars);
    for (const auto& e : monomials) {
        // Reduction modulo 7 rather than a std distribution keeps the stream
        // identical across standard library implementations.
        long c = static_cast<long>(rng() % 7) - 3;
        p.add_term(e, Rational(c));
    }
    return p;
}

} // namespace

Tuple random_tuple(const Variety& v, std::size_t n, std::uint32_t degree_bound, std::uint64_t seed,
                   std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(std::uint64_t(index) >> 32)};
    std::mt19937_64 rng(seq);

    const std::size_t d = v.derivations();
    std::vector<Exponent> monomials;
    Exponent cur(d, 0);
    exponents_up_to(d, degree_bound, cur, 0, monomials);

    Tuple t;
    for (std::size_t i = 0; i < n; ++i) {
        if (v.kind == VarietyKind::Poisson) {
            t.emplace_back(PoissonElement(DiffPoly::constant(random_poly(d, monomials, rng))));
        } else {
            std::vector<DiffPoly> c;
            for (std::size_t j = 0; j < d; ++j)
                c.push_back(DiffPoly::constant(random_poly(d, monomials, rng)));
            t.emplace_back(VectorField(std::move(c)));
        }
    }
    return t;
}

EquivVerdict equiv_sample(const EqSystem& s, const EqSystem& t, const EquivOptions& options)
{
    if (!(s.variety == t.variety) || s.n != t.n)
        throw std::invalid_argument("systems must share variety and unknown count");
    if (options.samples == 0)
        throw std::invalid_argument("equiv_sample needs at least one sample");
    EquivVerdict verdict;
    for (std::size_t k = 0; k < options.samples; ++k) {
        Tuple point = random_tuple(s.variety, s.n, options.degree_bound, options.seed, k);
        bool a = member(s, point);
        bool b = member(t, point);
        verdict.samples_checked = k + 1;
        if (a != b) {
            verdict.consistent = false;
            verdict.witness = std::move(point);
            verdict.sample_index = k;
            verdict.in_first = a;
            return verdict;
        }
    }
    return verdict;
}

} // namespace diffwitt
