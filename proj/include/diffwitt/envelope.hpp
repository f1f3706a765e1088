#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "diffwitt/diffpoly.hpp"

namespace diffwitt {

/// Element sum_theta r_theta * theta of the enveloping ring, every
/// coefficient standing to the left of its operator.
class EnvElement {
public:
    using TermMap = std::map<DerivOp, DiffPoly, std::greater<>>;

    explicit EnvElement(std::size_t derivations);

    /// r * 1.
    static EnvElement coefficient(const DiffPoly& r);
    /// 1 * theta.
    static EnvElement operator_term(const DerivOp& theta);
    /// delta_k, 1-based.
    static EnvElement derivation(std::size_t m, std::size_t k);

    std::size_t derivations() const { return m_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    DiffPoly coefficient_of(const DerivOp& theta) const;
    /// Largest order of an operator with nonzero coefficient, -1 for zero.
    int order() const;

    void add_term(const DerivOp& theta, const DiffPoly& r);

    EnvElement& operator+=(const EnvElement& other);
    EnvElement& operator-=(const EnvElement& other);
    EnvElement& operator*=(const Rational& c);

    friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
    friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
    friend EnvElement operator-(EnvElement a) { return a *= Rational(-1); }
    friend EnvElement operator*(EnvElement a, const Rational& c) { return a *= c; }
    friend EnvElement operator*(const Rational& c, EnvElement a) { return a *= c; }

    friend bool operator==(const EnvElement&, const EnvElement&) = default;

private:
    void require_same_derivations(const EnvElement& other) const;

    std::size_t m_;
    TermMap terms_;
};

/// r * u: multiplies every coefficient on the left.
EnvElement left_multiply(const DiffPoly& r, const EnvElement& u);

/// delta_k * u, normal-ordered with delta_k r = r delta_k + delta_k(r).
EnvElement left_multiply_derivation(std::size_t k, const EnvElement& u);

/// Normal-ordered product u * v.
EnvElement operator*(const EnvElement& u, const EnvElement& v);

/// Natural action on the differential ring: sum_theta r_theta * theta(f).
DiffPoly apply(const EnvElement& u, const DiffPoly& f);

/// Text form, e.g. "(x1^2)*D1*D2 + x1".
std::string to_string(const EnvElement& u);

} // namespace diffwitt
