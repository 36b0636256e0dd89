#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "endoscope/rational.hpp"

namespace endoscope {

/* Dense univariate polynomial over Q, coefficient i multiplies x^i.  The
 * zero polynomial has no coefficients; otherwise the leading coefficient is
 * nonzero. */
class RationalPoly {
   public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);
    RationalPoly(std::initializer_list<Rational> coeffs);

    static RationalPoly constant(const Rational& c);
    static RationalPoly monomial(const Rational& c, std::size_t degree);
    static RationalPoly x() { return monomial(1, 1); }
    static RationalPoly from_integers(const std::vector<Integer>& coeffs);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    RationalPoly derivative() const;
    RationalPoly monic() const;
    /* x^deg * p(1/x) */
    RationalPoly reciprocal() const;
    /* p(q(x)) */
    RationalPoly compose(const RationalPoly& q) const;
    /* p(c*x) */
    RationalPoly scale_variable(const Rational& c) const;
    RationalPoly pow(unsigned exp) const;

    bool has_integer_coefficients() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }
    /* lcm of the coefficient denominators */
    Integer denominator_lcm() const;
    /* primitive integer polynomial with positive leading coefficient, same roots */
    std::vector<Integer> primitive_integer_coeffs() const;

    std::string to_string(char var = 'x') const;

    RationalPoly operator-() const;
    RationalPoly& operator+=(const RationalPoly& rhs);
    RationalPoly& operator-=(const RationalPoly& rhs);
    RationalPoly& operator*=(const RationalPoly& rhs);
    RationalPoly& operator*=(const Rational& c);

    friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
    friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
    friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const RationalPoly& a, const RationalPoly& b) { return !(a == b); }
    /* total order: degree first, then coefficients from the top */
    friend bool operator<(const RationalPoly& a, const RationalPoly& b);

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

struct PolyDivMod {
    RationalPoly quotient;
    RationalPoly remainder;
};

PolyDivMod divmod(const RationalPoly& p, const RationalPoly& q);
RationalPoly operator/(const RationalPoly& p, const RationalPoly& q);
RationalPoly operator%(const RationalPoly& p, const RationalPoly& q);
bool divides(const RationalPoly& d, const RationalPoly& p);

/* monic gcd; gcd(0, 0) = 0 */
RationalPoly gcd(const RationalPoly& p, const RationalPoly& q);

struct ExtendedGcd {
    RationalPoly gcd;  // monic
    RationalPoly s;    // s*p + t*q = gcd
    RationalPoly t;
};
ExtendedGcd extended_gcd(const RationalPoly& p, const RationalPoly& q);

/* monic product of the distinct irreducible factors */
RationalPoly squarefree_part(const RationalPoly& p);
bool is_squarefree(const RationalPoly& p);
/* Yun: p = lc * prod a_i^i with a_i monic, squarefree, pairwise coprime;
 * returns the nonconstant (a_i, i). */
std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p);

Rational resultant(const RationalPoly& p, const RationalPoly& q);

/* Newton interpolation through (xs[i], ys[i]); xs distinct. */
RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/* p(x) == ±x^deg p(1/x); sign written to *sign when non-null */
bool is_reciprocal(const RationalPoly& p, int* sign = nullptr);

}  // namespace endoscope
