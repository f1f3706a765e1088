#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "diffwitt/diffpoly.hpp"

namespace diffwitt {

/// f_1 delta_1 + ... + f_m delta_m with coefficients in C_m{y}. All
/// components share the derivation count m and one generator context.
class VectorField {
public:
    explicit VectorField(std::vector<DiffPoly> components);

    static VectorField zero(std::size_t m, std::size_t gen_count = 0);
    /// f * delta_k, 1-based.
    static VectorField along(const DiffPoly& f, std::size_t k);

    std::size_t derivations() const { return components_.size(); }
    std::size_t gen_count() const { return components_.front().gen_count(); }
    /// Coefficient of delta_k, 1-based.
    const DiffPoly& component(std::size_t k) const { return components_.at(k - 1); }
    const std::vector<DiffPoly>& components() const { return components_; }
    bool is_zero() const;
    bool is_y_free() const;

    VectorField with_gen_count(std::size_t gen_count) const;

    VectorField& operator+=(const VectorField& other);
    VectorField& operator-=(const VectorField& other);
    VectorField& operator*=(const Rational& c);

    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator-(VectorField a) { return a *= Rational(-1); }
    friend VectorField operator*(VectorField a, const Rational& c) { return a *= c; }
    friend VectorField operator*(const Rational& c, VectorField a) { return a *= c; }

    friend bool operator==(const VectorField&, const VectorField&) = default;

private:
    void require_same_derivations(const VectorField& other) const;

    std::vector<DiffPoly> components_;
};

/// Left-symmetric Witt product: (u o v)_j = sum_i u_i * delta_i(v_j).
VectorField lsym(const VectorField& u, const VectorField& v);

/// Witt bracket [u, v] = u o v - v o u.
VectorField wbracket(const VectorField& u, const VectorField& v);

/// Classical basis e_k = x1^{k+1} delta_1 of W_1, k >= -1.
VectorField witt_basis(int k);

/// Element of P(A) for a differential algebra with 2m derivations.
class PoissonElement {
public:
    explicit PoissonElement(DiffPoly value);

    const DiffPoly& value() const { return value_; }
    std::size_t derivations() const { return value_.derivations(); }
    std::size_t half_rank() const { return value_.derivations() / 2; }
    bool is_zero() const { return value_.is_zero(); }

    friend PoissonElement operator+(const PoissonElement& a, const PoissonElement& b);
    friend PoissonElement operator-(const PoissonElement& a, const PoissonElement& b);
    friend PoissonElement operator-(const PoissonElement& a) { return PoissonElement(-a.value_); }
    friend PoissonElement operator*(const PoissonElement& a, const PoissonElement& b);
    friend PoissonElement operator*(const Rational& c, const PoissonElement& a) { return PoissonElement(c * a.value_); }

    friend bool operator==(const PoissonElement&, const PoissonElement&) = default;

private:
    DiffPoly value_;
};

/// {f, g} = sum_i delta_{2i-1}(f) delta_{2i}(g) - delta_{2i}(f) delta_{2i-1}(g).
PoissonElement pbracket(const PoissonElement& f, const PoissonElement& g);

/// "V(f1; f2; ...)".
std::string to_string(const VectorField& u);
std::string to_string(const PoissonElement& f);

} // namespace diffwitt
