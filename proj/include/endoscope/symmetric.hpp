#pragma once

#include <vector>

#include "endoscope/poly.hpp"

namespace endoscope {

/* Newton power sums s_1..s_count of the roots of p (with multiplicity). */
std::vector<Rational> power_sums(const RationalPoly& p, std::size_t count);

/* Monic polynomial of degree n with power sums s_1..s_n. */
RationalPoly from_power_sums(const std::vector<Rational>& sums, std::size_t n);

/* Monic polynomial whose roots are mu^m for the roots mu of p. */
RationalPoly root_powers_poly(const RationalPoly& p, unsigned m);

/* Monic polynomial whose roots are all products mu*nu, mu a root of a and
 * nu a root of b (deg a * deg b roots). */
RationalPoly pair_products_poly(const RationalPoly& a, const RationalPoly& b);

/* Monic polynomial whose roots are the products over all k-element subsets
 * of the roots of p (binomial(deg p, k) roots). */
RationalPoly subset_products_poly(const RationalPoly& p, unsigned k);

}  // namespace endoscope
