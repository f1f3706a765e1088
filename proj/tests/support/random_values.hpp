#pragma once

// Random generators shared by the property tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "diffwitt/envelope.hpp"
#include "diffwitt/freealg.hpp"

namespace diffwitt::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Rational small_rational()
    {
        int num = integer(-5, 5);
        int den = integer(1, 3);
        return make_rational(num, den);
    }

    Rational nonzero_rational()
    {
        Rational q = 0;
        while (q == 0)
            q = small_rational();
        return q;
    }

    Exponent exponent(std::size_t vars, std::uint32_t max_degree)
    {
        Exponent e(vars, 0);
        std::uint32_t budget = static_cast<std::uint32_t>(integer(0, static_cast<int>(max_degree)));
        for (std::uint32_t k = 0; k < budget; ++k)
            ++e[static_cast<std::size_t>(integer(0, static_cast<int>(vars) - 1))];
        return e;
    }

    Poly poly(std::size_t vars, std::uint32_t max_degree, int max_terms = 3)
    {
        Poly p(vars);
        int terms = integer(0, max_terms);
        for (int t = 0; t < terms; ++t)
            p.add_term(exponent(vars, max_degree), small_rational());
        return p;
    }

    DerivOp theta(std::size_t m, std::uint32_t max_order)
    {
        Exponent e = exponent(m, max_order);
        return DerivOp(std::vector<std::uint32_t>(e.begin(), e.end()));
    }

    /// Element of C_m{y_1..y_gens}: a few terms of y-degree <= 2.
    DiffPoly diffpoly(std::size_t m, std::size_t gens, std::uint32_t coeff_degree, std::uint32_t max_order,
                      int max_terms = 3)
    {
        DiffPoly f(m, gens);
        int terms = integer(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            std::vector<DiffIndeterminate> factors;
            int degree = gens == 0 ? 0 : integer(0, 2);
            for (int k = 0; k < degree; ++k)
                factors.push_back({static_cast<std::uint32_t>(integer(1, static_cast<int>(gens))), theta(m, max_order)});
            f.add_term(DiffMonomial(std::move(factors)), poly(m, coeff_degree, 2));
        }
        return f;
    }

    VectorField vector_field(std::size_t m, std::size_t gens, std::uint32_t coeff_degree, std::uint32_t max_order)
    {
        std::vector<DiffPoly> c;
        for (std::size_t k = 0; k < m; ++k)
            c.push_back(coin() ? diffpoly(m, gens, coeff_degree, max_order, 2) : DiffPoly(m, gens));
        return VectorField(std::move(c));
    }

    EnvElement env(std::size_t m, std::size_t gens, std::uint32_t coeff_degree, std::uint32_t max_order)
    {
        EnvElement u(m);
        int terms = integer(1, 3);
        for (int t = 0; t < terms; ++t)
            u.add_term(theta(m, max_order), diffpoly(m, gens, coeff_degree, 1, 2));
        return u;
    }

    /// Nonzero multilinear element of R{y_1..y_n}.
    DiffPoly multilinear(std::size_t m, std::size_t n, std::uint32_t max_order)
    {
        DiffPoly g(m, n);
        while (g.is_zero()) {
            int terms = integer(1, 4);
            for (int t = 0; t < terms; ++t) {
                std::vector<DiffIndeterminate> factors;
                for (std::size_t i = 1; i <= n; ++i)
                    factors.push_back({static_cast<std::uint32_t>(i), theta(m, max_order)});
                g.add_term(DiffMonomial(std::move(factors)), Poly::constant(m, nonzero_rational()));
            }
        }
        return g;
    }

    /// Random operation tree with `leaves` generator leaves drawn from z_1..z_n.
    FreeTerm tree(FreeTerm::Op op, std::size_t n, int leaves)
    {
        if (leaves <= 1)
            return FreeTerm::generator(static_cast<std::size_t>(integer(1, static_cast<int>(n))));
        int left = integer(1, leaves - 1);
        return FreeTerm::binary(op, tree(op, n, left), tree(op, n, leaves - left));
    }

    /// Linear combination of up to `terms` trees of degree <= max_degree.
    FreeTerm term(const std::vector<FreeTerm::Op>& ops, std::size_t n, int max_degree, int terms = 2)
    {
        FreeTerm t;
        int count = integer(1, terms);
        for (int k = 0; k < count; ++k) {
            FreeTerm::Op op = ops[static_cast<std::size_t>(integer(0, static_cast<int>(ops.size()) - 1))];
            FreeTerm piece = FreeTerm::scaled(Rational(integer(1, 3)) * (coin() ? 1 : -1),
                                              tree(op, n, integer(1, max_degree)));
            t = k == 0 ? piece : t + piece;
        }
        return t;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace diffwitt::testing
