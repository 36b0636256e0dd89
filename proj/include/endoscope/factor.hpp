#pragma once

#include <utility>
#include <vector>

#include "endoscope/poly.hpp"

namespace endoscope {

inline constexpr int max_factor_degree = 64;

struct PolyFactor {
    RationalPoly factor;  // monic, irreducible over Q
    int multiplicity;
};

/* Complete factorization over Q: squarefree decomposition, then each
 * squarefree part is factored modulo a small prime, Hensel-lifted and
 * recombined.  The product of factor^multiplicity equals p up to its leading
 * coefficient.  Output is sorted (degree, then coefficients). */
std::vector<PolyFactor> factor_over_q(const RationalPoly& p);

bool is_irreducible(const RationalPoly& p);

/* Rebuilds lc(p) * prod factor^multiplicity; used for round-trip checks. */
RationalPoly expand_factorization(const Rational& leading, const std::vector<PolyFactor>& factors);

}  // namespace endoscope
