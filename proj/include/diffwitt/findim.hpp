#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "diffwitt/poly.hpp"

namespace diffwitt {

/// Algebra with basis e_1..e_dim and products e_i e_j = sum_k gamma(i,j,k) e_k.
/// No axioms are imposed on the table.
class StructureConstants {
public:
    /// gamma[i][j][k], all 0-based, each level of length dim.
    explicit StructureConstants(std::vector<std::vector<std::vector<Rational>>> gamma);

    /// M_k(Q) with basis e_{11}, e_{12}, ..., e_{kk} in row-major order.
    static StructureConstants matrix_algebra(std::size_t k);
    /// Upper-triangular k x k matrices, basis e_{ab} (a <= b) in row-major order.
    static StructureConstants upper_triangular(std::size_t k);

    std::size_t dim() const { return dim_; }
    /// 1-based indices.
    const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const;
    std::vector<std::vector<std::vector<Rational>>> table() const;

    bool is_associative() const;

private:
    std::size_t dim_;
    std::vector<Rational> gamma_;
};

/// Element of A tensored with a polynomial ring: one coordinate per basis
/// vector.
struct GenericElement {
    std::vector<Poly> coords;

    std::size_t dim() const { return coords.size(); }
    bool is_zero() const;

    friend bool operator==(const GenericElement&, const GenericElement&) = default;
};

GenericElement operator+(const GenericElement& a, const GenericElement& b);
GenericElement operator*(const Rational& c, const GenericElement& a);

/// Bilinear product through the structure constants.
GenericElement multiply(const GenericElement& a, const GenericElement& b, const StructureConstants& alg);

/// X_i = x_i^1 e_1 + ... + x_i^dim e_dim over a ring with unknowns * dim
/// variables; x_i^j is variable (i-1)*dim + j.
GenericElement generic(std::size_t i, const StructureConstants& alg, std::size_t unknowns);

/// Constant element sum_j c_j e_j over a ring with var_count variables.
GenericElement constant_element(std::span<const Rational> coords, std::size_t var_count);

/// Term in unknowns X_1..X_n, basis constants e_k, the algebra product and
/// the module operations.
class AlgTerm {
public:
    enum class Op { Zero, Unknown, Basis, Sum, Scale, Product };

    AlgTerm();
    static AlgTerm zero();
    static AlgTerm unknown(std::size_t i);
    static AlgTerm basis(std::size_t k);
    static AlgTerm sum(AlgTerm a, AlgTerm b);
    static AlgTerm scaled(const Rational& c, AlgTerm a);
    static AlgTerm product(AlgTerm a, AlgTerm b);

    Op op() const;
    std::size_t index() const;
    const Rational& factor() const;
    const AlgTerm& left() const;
    const AlgTerm& right() const;
    std::size_t max_unknown() const;

    friend AlgTerm operator+(AlgTerm a, AlgTerm b) { return sum(std::move(a), std::move(b)); }
    friend AlgTerm operator-(AlgTerm a, AlgTerm b) { return sum(std::move(a), scaled(Rational(-1), std::move(b))); }
    friend AlgTerm operator*(AlgTerm a, AlgTerm b) { return product(std::move(a), std::move(b)); }
    friend AlgTerm operator*(const Rational& c, AlgTerm a) { return scaled(c, std::move(a)); }
    /// Structural equality.
    friend bool operator==(const AlgTerm& a, const AlgTerm& b);

private:
    struct Node;
    explicit AlgTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const AlgTerm& t);

/// Evaluates t with X_i -> values[i-1]. All values share one coordinate ring.
GenericElement evaluate(const AlgTerm& t, const StructureConstants& alg, std::span<const GenericElement> values);

/// Coordinates s_1..s_dim of t evaluated on generic elements X_1..X_n;
/// t = 0 has a solution in A^n exactly where all s_k vanish.
std::vector<Poly> flatten(const AlgTerm& t, const StructureConstants& alg, std::size_t unknowns);

} // namespace diffwitt
