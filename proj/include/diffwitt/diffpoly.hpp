#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "diffwitt/poly.hpp"

namespace diffwitt {

/// Derivative operator delta_1^{i_1} ... delta_m^{i_m}, stored as its
/// multi-index. The default ordering is pure lex on the multi-index.
struct DerivOp {
    std::vector<std::uint32_t> index;

    DerivOp() = default;
    explicit DerivOp(std::vector<std::uint32_t> multi_index) : index(std::move(multi_index)) {}
    static DerivOp identity(std::size_t m) { return DerivOp(std::vector<std::uint32_t>(m, 0)); }
    /// delta_k, 1-based.
    static DerivOp delta(std::size_t m, std::size_t k);

    std::size_t size() const { return index.size(); }
    std::uint32_t order() const;
    bool is_identity() const { return order() == 0; }
    /// The operator delta_k * this.
    DerivOp raised(std::size_t k) const;

    friend auto operator<=>(const DerivOp&, const DerivOp&) = default;
    friend bool operator==(const DerivOp&, const DerivOp&) = default;
};

DerivOp operator+(const DerivOp& a, const DerivOp& b);

/// y_gen^theta.
struct DiffIndeterminate {
    std::uint32_t gen = 1;
    DerivOp theta;

    friend auto operator<=>(const DiffIndeterminate&, const DiffIndeterminate&) = default;
    friend bool operator==(const DiffIndeterminate&, const DiffIndeterminate&) = default;
};

/// Product of indeterminates, kept sorted by (gen, theta lex). The empty
/// product is the monomial 1.
class DiffMonomial {
public:
    DiffMonomial() = default;
    explicit DiffMonomial(std::vector<DiffIndeterminate> factors);

    const std::vector<DiffIndeterminate>& factors() const { return factors_; }
    std::size_t degree() const { return factors_.size(); }
    bool is_one() const { return factors_.empty(); }

    friend DiffMonomial operator*(const DiffMonomial& a, const DiffMonomial& b);

    friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;
    friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;

private:
    std::vector<DiffIndeterminate> factors_;
};

/// Term order for DiffPoly: higher degree first, then factor-wise lex.
struct DiffMonomialOrder {
    bool operator()(const DiffMonomial& a, const DiffMonomial& b) const;
};

/// Element of C_m{y_1, ..., y_n}: a finite sum of differential monomials with
/// coefficients in Q[x_1..x_m]. `gen_count` is the size of the generator
/// context, not part of the value: equality ignores it and binary operations
/// take the larger of the two contexts.
class DiffPoly {
public:
    using TermMap = std::map<DiffMonomial, Poly, DiffMonomialOrder>;

    DiffPoly(std::size_t derivations, std::size_t gen_count);

    static DiffPoly constant(const Poly& c, std::size_t gen_count = 0);
    static DiffPoly scalar(std::size_t derivations, const Rational& c, std::size_t gen_count = 0);
    /// y_gen^theta; the context is widened to contain `gen`.
    static DiffPoly indeterminate(std::uint32_t gen, const DerivOp& theta, std::size_t gen_count = 0);

    std::size_t derivations() const { return m_; }
    std::size_t gen_count() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// True when no differential indeterminate occurs (an element of C_m).
    bool is_y_free() const;
    /// Coefficient of the monomial 1.
    Poly constant_part() const;
    Poly coefficient(const DiffMonomial& u) const;
    /// Largest generator index that occurs (0 when y-free).
    std::uint32_t max_gen_used() const;

    DiffPoly with_gen_count(std::size_t gen_count) const;

    void add_term(const DiffMonomial& u, const Poly& c);

    DiffPoly& operator+=(const DiffPoly& other);
    DiffPoly& operator-=(const DiffPoly& other);
    DiffPoly& operator*=(const Rational& c);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator-(DiffPoly a) { return a *= Rational(-1); }
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend DiffPoly operator*(DiffPoly a, const Rational& c) { return a *= c; }
    friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }

    friend bool operator==(const DiffPoly& a, const DiffPoly& b)
    {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }

private:
    void require_same_derivations(const DiffPoly& other) const;

    std::size_t m_;
    std::size_t n_;
    TermMap terms_;
};

/// delta_k (1-based): partial_k on coefficients, y^theta -> y^{theta + e_k}.
DiffPoly derive(const DiffPoly& f, std::size_t k);

/// theta(f) by iterated derive.
DiffPoly apply_operator(const DiffPoly& f, const DerivOp& theta);

/// The differential homomorphism fixing C_m with y_i -> targets[i-1].
/// targets.size() must equal f.gen_count(); the result lives in the largest
/// generator context among the targets.
DiffPoly substitute(const DiffPoly& f, std::span<const DiffPoly> targets);

/// X(theta) = x^alpha / alpha!, the polynomial with theta(X) = 1.
Poly x_theta(const DerivOp& theta);

/// beta-lex comparison of polylinear monomials in the same generators.
std::strong_ordering beta_compare(const DiffMonomial& u, const DiffMonomial& v);

/// Generators occurring in f, ascending.
std::vector<std::uint32_t> generators_used(const DiffPoly& f);

/// Each occurring generator appears exactly once in every monomial and all
/// coefficients are scalars.
bool is_multilinear(const DiffPoly& f);

struct Separation {
    DiffMonomial leading;             ///< the beta-minimal monomial
    Rational leading_coefficient;
    std::vector<Poly> targets;        ///< y_i -> targets[i-1]; unused generators map to 0
    Poly witness;                     ///< image of g, equal to the leading coefficient
};

/// Separating substitution for a nonzero multilinear g in R{y}: maps every
/// y_i to X(theta_i) of the beta-minimal monomial, which kills every other
/// monomial. Throws std::invalid_argument for zero or non-multilinear g.
Separation separate(const DiffPoly& g);

std::string to_string(const DerivOp& theta);
std::string to_string(const DiffMonomial& u);
std::string to_string(const DiffPoly& f);

} // namespace diffwitt
