#pragma once

#include <variant>
#include <vector>

#include "endoscope/quaternion.hpp"

namespace endoscope {

inline constexpr unsigned long max_iterate = 1000000;

/* An endomorphism f of a g-dimensional simple abelian variety, given by its
 * image in End_Q(X): a number field element or a quaternion element. */
struct EndomorphismSpec {
    std::variant<NFElement, QuatElement> element;
    int g = 1;

    bool is_quaternion() const { return std::holds_alternative<QuatElement>(element); }
    const NFElement& field_element() const { return std::get<NFElement>(element); }
    const QuatElement& quat_element() const { return std::get<QuatElement>(element); }
    /* center F of End_Q(X) */
    FieldPtr center() const;
    int d() const { return is_quaternion() ? 2 : 1; }
    int e() const { return center()->degree(); }
};

/* Characteristic polynomial over Q of f: the field charpoly (degree e) or
 * the reduced charpoly (degree 2e). */
RationalPoly rational_charpoly(const EndomorphismSpec& spec);
/* 2g/(d e), the power of rational_charpoly giving the degree-2g charpoly of
 * the rational representation; fails when not integral. */
int multiplicity_exponent(const EndomorphismSpec& spec);

struct EigenvalueGroup {
    RationalPoly factor;  // irreducible, monic
    int multiplicity;     // per root
    IrreducibleRoots roots;
};

struct EigenvalueMultiset {
    std::vector<EigenvalueGroup> groups;
    RationalPoly source_poly;  // rational_charpoly ^ multiplicity_exponent
    int total = 0;             // 2g

    std::size_t distinct() const;
};

/* |N_{D/Q}(1 - f^n)|^(2g/(de)), computed by exact norms. */
Integer fixed_points_exact(const EndomorphismSpec& spec, unsigned long n);

EigenvalueMultiset rational_eigenvalues(const EndomorphismSpec& spec, long precision_bits = default_precision);

/* |prod (1 - mu^n)| over the multiset in ball arithmetic, rounded once the
 * enclosure is narrower than 1/2.  Exactly 0 when a root of unity of order
 * dividing n is present. */
Integer fixed_points_via_eigenvalues(const EigenvalueMultiset& ev, unsigned long n);

/* |det(I - M^n)| for M the companion matrix of P doubled to C (x) I_2. */
Integer companion_oracle(const RationalPoly& p, unsigned long n);

/* Order k when q (monic, integral, irreducible) divides x^k - 1. */
std::optional<unsigned long> cyclotomic_order(const RationalPoly& q);

}  // namespace endoscope
