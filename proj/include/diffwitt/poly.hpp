#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "diffwitt/rational.hpp"

namespace diffwitt {

/// Exponent vector of a monomial x1^e1 ... xm^em.
using Exponent = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponent& e);

/// Degree-lexicographic order, descending: larger total degree first, ties
/// broken by pure lex with x1 > x2 > ... . Used as the map order so that
/// iteration yields the canonical printing order.
struct DegLexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Pure lexicographic comparison of exponent vectors of equal length.
std::strong_ordering lex_compare(const Exponent& a, const Exponent& b);

/// Sparse polynomial in x1..xm over Q. No stored coefficient is zero; the
/// zero polynomial is the empty map and still remembers its variable count.
class Poly {
public:
    using TermMap = std::map<Exponent, Rational, DegLexGreater>;

    explicit Poly(std::size_t var_count);

    static Poly constant(std::size_t var_count, const Rational& c);
    /// x_i, 1-based.
    static Poly variable(std::size_t var_count, std::size_t i);
    static Poly monomial(Exponent e, const Rational& c);

    std::size_t var_count() const { return var_count_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the monomial 1.
    Rational constant_term() const;
    Rational coefficient(const Exponent& e) const;
    /// -1 for the zero polynomial.
    int degree() const;

    /// Adds c * x^e in place.
    void add_term(const Exponent& e, const Rational& c);

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a);

    friend bool operator==(const Poly& a, const Poly& b) = default;

    Rational evaluate(std::span<const Rational> point) const;

private:
    void require_same_ring(const Poly& other) const;

    std::size_t var_count_;
    TermMap terms_;
};

Poly pow(const Poly& p, std::uint32_t k);

/// Formal partial derivative with respect to x_i, 1-based.
Poly partial(const Poly& p, std::size_t i);

/// Canonical text form, e.g. "3/2*x1^2*x2 - x2".
std::string to_string(const Poly& p);

/// Text of a single monomial x^e without coefficient ("" for e = 0).
std::string monomial_text(const Exponent& e);

} // namespace diffwitt
