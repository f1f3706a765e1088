#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diffwitt/liealg.hpp"

namespace diffwitt {

enum class VarietyKind { LSymWitt, Witt, Poisson };

/// Var(L_m), Var(W_m) or Var(P_m).
struct Variety {
    VarietyKind kind = VarietyKind::Witt;
    std::size_t m = 1;

    /// Derivations of the representing algebra: m for L/W, 2m for Poisson.
    std::size_t derivations() const { return kind == VarietyKind::Poisson ? 2 * m : m; }
    /// Differential indeterminates per free generator (y_i1..y_im, or y_i).
    std::size_t slots_per_generator() const { return kind == VarietyKind::Poisson ? 1 : m; }

    /// "L2", "W1", "P1".
    static Variety parse(std::string_view name);
    std::string name() const;

    friend bool operator==(const Variety&, const Variety&) = default;
};

/// Concrete or coproduct element: a vector field for L/W, a scalar for Poisson.
using Element = std::variant<VectorField, PoissonElement>;

std::string to_string(const Element& e);
bool is_zero(const Element& e);

/// Immutable expression tree over free generators z_1..z_n and constants.
/// Linear structure (zero, sums, rational multiples) sits beside the
/// variety operations. Built through the factory functions, which fold
/// nested scalings and drop multiplications by 1.
class FreeTerm {
public:
    enum class Op { Zero, Generator, Constant, Sum, Scale, LSymProd, LieBracket, PoissonMul, PoissonBracket };

    FreeTerm();

    static FreeTerm zero();
    static FreeTerm generator(std::size_t i);
    static FreeTerm constant(Element value);
    static FreeTerm sum(FreeTerm a, FreeTerm b);
    static FreeTerm scaled(const Rational& c, FreeTerm a);
    static FreeTerm lsym(FreeTerm a, FreeTerm b);
    static FreeTerm lie(FreeTerm a, FreeTerm b);
    static FreeTerm poisson_mul(FreeTerm a, FreeTerm b);
    static FreeTerm poisson_bracket(FreeTerm a, FreeTerm b);
    static FreeTerm binary(Op op, FreeTerm a, FreeTerm b);

    Op op() const;
    std::size_t generator_index() const;
    const Element& constant_value() const;
    const Rational& factor() const;
    const FreeTerm& left() const;
    const FreeTerm& right() const;
    bool is_binary_operation() const;

    bool has_constants() const;
    /// Largest generator index, 0 when none occur.
    std::size_t max_generator() const;

    friend FreeTerm operator+(FreeTerm a, FreeTerm b) { return sum(std::move(a), std::move(b)); }
    friend FreeTerm operator-(FreeTerm a, FreeTerm b) { return sum(std::move(a), scaled(Rational(-1), std::move(b))); }
    friend FreeTerm operator-(FreeTerm a) { return scaled(Rational(-1), std::move(a)); }
    friend FreeTerm operator*(const Rational& c, FreeTerm a) { return scaled(c, std::move(a)); }

    /// Structural equality.
    friend bool operator==(const FreeTerm& a, const FreeTerm& b);

private:
    struct Node;
    explicit FreeTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

std::string to_string(const FreeTerm& t);

/// Checks tags against the variety and generator indices against n. Throws
/// std::invalid_argument naming the offending node.
void validate(const FreeTerm& t, const Variety& v, std::size_t n);

/// Evaluates t in L(C~), W(C~) or P(C~) with z_i -> Y_i = sum_j y_{(i-1)m+j} delta_j
/// (L/W) or z_i -> y_i (Poisson). Lie brackets in a left-symmetric term are
/// expanded to commutators of the left-symmetric product.
Element represent(const FreeTerm& t, const Variety& v, std::size_t n);

/// True iff t vanishes in the free algebra of the variety. Constants are
/// rejected.
bool is_identity(const FreeTerm& t, const Variety& v);

bool free_equal(const FreeTerm& a, const FreeTerm& b, const Variety& v);

/// Full polarization: splits t into multihomogeneous parts and replaces the
/// d occurrences of each generator by d fresh generators summed over all
/// assignments. Already-multilinear parts are returned unchanged; otherwise
/// fresh generators are numbered consecutively. Syntactically zero parts
/// are dropped.
std::vector<FreeTerm> multilinearize(const FreeTerm& t, std::size_t n);

} // namespace diffwitt
