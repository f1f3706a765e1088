#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "diffwitt/freealg.hpp"

namespace diffwitt {

/// Equations s = 0 over L_m, W_m or P_m in unknowns z_1..z_n; constants allowed.
struct EqSystem {
    Variety variety;
    std::size_t n = 1;
    std::vector<FreeTerm> equations;
};

/// Concrete point (a_1, ..., a_n): vector fields over C_m, or polynomials in
/// 2m variables for Poisson, with no differential indeterminates.
using Tuple = std::vector<Element>;

/// Throws unless every entry is a y-free element of the variety's algebra.
void validate_tuple(const Tuple& t, const Variety& v);

/// Value of s at the tuple: the representation of s with y_ij replaced by the
/// j-th coefficient of a_i (y_i -> a_i for Poisson).
Element eval_at(const FreeTerm& s, const Tuple& t, const Variety& v);

/// Coefficients s_1..s_m of the representation of s (L/W only), in a
/// generator context of n * m indeterminates.
std::vector<DiffPoly> componentize(const FreeTerm& s, const Variety& v, std::size_t n);

/// True iff every equation of S vanishes at t.
bool member(const EqSystem& system, const Tuple& t);

struct EquivOptions {
    std::uint32_t degree_bound = 2;
    std::size_t samples = 64;
    std::uint64_t seed = 42;
};

struct EquivVerdict {
    bool consistent = true;
    std::optional<Tuple> witness;
    std::size_t sample_index = 0;   ///< index of the witness sample
    bool in_first = false;          ///< membership of the witness in the first system
    std::size_t samples_checked = 0;
};

/// Pseudorandom tuple number `index` of the stream for `seed`: coefficients
/// uniform on {-3..3}, every monomial of degree <= degree_bound. Each index
/// has its own generator state, so samples can be drawn in any order.
Tuple random_tuple(const Variety& v, std::size_t n, std::uint32_t degree_bound, std::uint64_t seed,
                   std::size_t index);

/// Probabilistic probe of Z(S) = Z(T): returns the first sampled tuple on
/// which membership differs, or "consistent at this scale".
EquivVerdict equiv_sample(const EqSystem& s, const EqSystem& t, const EquivOptions& options);

} // namespace diffwitt
