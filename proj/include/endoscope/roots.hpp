#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "endoscope/bigfloat.hpp"
#include "endoscope/poly.hpp"

namespace endoscope {

inline constexpr long default_precision = 128;
inline constexpr long max_precision = 2048;

/* Disk centered at (re_mid, im_mid) holding exactly one root. */
struct ComplexEnclosure {
    BigFloat re_mid;
    BigFloat im_mid;
    BigFloat radius;
    bool certified_real = false;

    mpfr_prec_t precision() const { return re_mid.precision(); }
    /* square ball containing the disk */
    ComplexBall ball() const;
};

/* Certified isolation of the roots of a squarefree polynomial.  Starts at
 * precision_bits and doubles on failure up to max_precision.  The result is
 * sorted by real part, then imaginary part. */
std::vector<ComplexEnclosure> isolate_roots(const RationalPoly& p, long precision_bits = default_precision);

/* Re-isolates at higher precision and returns the roots in the order of
 * coarse (matched by enclosure overlap). */
std::vector<ComplexEnclosure> refine_roots(const RationalPoly& p, const std::vector<ComplexEnclosure>& coarse,
                                           long precision_bits);

/* Position relative to the unit circle: -1 inside, 0 on, +1 outside. */
struct IrreducibleRoots {
    RationalPoly poly;
    std::vector<ComplexEnclosure> roots;
    std::vector<int> circle_side;
    long precision = default_precision;
};

/* Root isolation for an irreducible polynomial together with an exact
 * decision of which roots lie on the unit circle (via reciprocity). */
IrreducibleRoots analyze_irreducible(const RationalPoly& q, long precision_bits = default_precision);

/* Best continued-fraction approximation with denominator <= bound. */
Rational rational_reconstruct(const BigFloat& x, const Integer& denominator_bound);

struct RootMatch {
    std::size_t candidate;  // index into the candidate list
    std::size_t root;       // index into the root list of that candidate
    ComplexEnclosure enclosure;
    long precision;
};

/* Identifies the unique root, across all candidates, whose enclosure meets
 * target(prec).  Precision is raised until exactly one root qualifies. */
RootMatch match_root(const std::vector<RationalPoly>& candidates, const std::function<ComplexBall(long)>& target,
                     long precision_bits = default_precision);

}  // namespace endoscope
