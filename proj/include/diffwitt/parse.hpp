#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "diffwitt/envelope.hpp"
#include "diffwitt/findim.hpp"
#include "diffwitt/freealg.hpp"

namespace diffwitt {

/// Syntax or validation error at a 1-based line/column of the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Grammar shared by every entry point:
//
//   sum     := circle (('+' | '-') circle)*
//   circle  := product ['o' product]          -- 'o' does not chain
//   product := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' INT | '^' '(' INT {',' INT} ')')*
//   atom    := INT | x<k> | y<k> | z<k> | D<k> | e<k> | X<k>
//            | '(' sum ')' | '[' sum ',' sum ']' | '{' sum ',' sum '}'
//            | 'V' '(' sum {';' sum} ')' | 'P' '(' sum ')'
//
// `y<k>^(i1,...,im)` attaches a derivative operator; any other '^' is a power.
// UTF-8 input may use U+2218 for 'o', U+00B7 for '*' and U+2212 for '-'.
// Which symbols and operators are legal depends on the entry point.

/// Polynomial in x1..xm.
Poly parse_poly(std::string_view text, std::size_t m);

/// Differential polynomial over m derivations; the generator context is the
/// largest y index used, or `gen_count` if that is larger.
DiffPoly parse_diffpoly(std::string_view text, std::size_t m, std::size_t gen_count = 0);

/// Enveloping-ring element; D<k> is the k-th derivation and products are
/// normal-ordered.
EnvElement parse_env(std::string_view text, std::size_t m);

/// Either "V(f1; ...; fm)" or a sum of first-order terms "f1*D1 + ...".
VectorField parse_vector_field(std::string_view text, std::size_t m);

/// Concrete or coproduct element of the variety's representing algebra:
/// a vector field for L/W, a polynomial in 2m variables (optionally wrapped
/// in "P(...)") for Poisson.
Element parse_element(std::string_view text, const Variety& v);

/// Free-algebra term. Constants are V(...) literals (L/W) or P(...) literals
/// and bare polynomial subexpressions (Poisson).
FreeTerm parse_term(std::string_view text, const Variety& v);

/// Term in unknowns X<i> and basis elements e<k> of the algebra.
AlgTerm parse_alg_term(std::string_view text, const StructureConstants& alg);

} // namespace diffwitt
