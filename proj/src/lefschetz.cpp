#include "endoscope/lefschetz.hpp"

#include <cmath>

#include "endoscope/error.hpp"
#include "endoscope/factor.hpp"

namespace endoscope {

FieldPtr EndomorphismSpec::center() const
{
    return is_quaternion() ? quat_element().algebra()->base() : field_element().field();
}

RationalPoly rational_charpoly(const EndomorphismSpec& spec)
{
    return spec.is_quaternion() ? reduced_charpoly_over_q(spec.quat_element()) : field_charpoly(spec.field_element());
}

int multiplicity_exponent(const EndomorphismSpec& spec)
{
    int de = spec.d() * spec.e();
    if (spec.g < 1) fail(ErrorKind::validation, "dimension g must be positive");
    if ((2 * spec.g) % de != 0)
        fail(ErrorKind::divisibility_violation, "2g = " + std::to_string(2 * spec.g) + " is not a multiple of d*e = " + std::to_string(de));
    return 2 * spec.g / de;
}

std::size_t EigenvalueMultiset::distinct() const
{
    std::size_t n = 0;
    for (const auto& g : groups) n += g.roots.roots.size();
    return n;
}

Integer fixed_points_exact(const EndomorphismSpec& spec, unsigned long n)
{
    if (n < 1 || n > max_iterate) fail(ErrorKind::validation, "iterate index must lie in [1, " + std::to_string(max_iterate) + "]");
    int exponent = multiplicity_exponent(spec);
    Rational nm;
    if (spec.is_quaternion()) {
        const QuatElement& f = spec.quat_element();
        QuatElement w = QuatElement::scalar(f.algebra(), 1) - f.pow(n);
        nm = norm(reduced_norm(w));
    } else {
        const NFElement& f = spec.field_element();
        nm = norm(NFElement::from_rational(f.field(), 1) - f.pow(static_cast<long>(n)));
    }
    if (!is_integer(nm)) fail(ErrorKind::non_integral_element, "norm of 1 - f^n is not an integer");
    return pow(Integer(abs(nm.get_num())), static_cast<unsigned long>(exponent));
}

EigenvalueMultiset rational_eigenvalues(const EndomorphismSpec& spec, long precision_bits)
{
    int exponent = multiplicity_exponent(spec);
    RationalPoly p = rational_charpoly(spec);
    EigenvalueMultiset ev;
    ev.source_poly = p.pow(static_cast<unsigned>(exponent));
    ev.total = 2 * spec.g;
    int count = 0;
    for (const auto& f : factor_over_q(p)) {
        EigenvalueGroup g{f.factor, f.multiplicity * exponent, analyze_irreducible(f.factor, precision_bits)};
        count += g.multiplicity * f.factor.degree();
        ev.groups.push_back(std::move(g));
    }
    if (count != ev.total) fail(ErrorKind::internal, "eigenvalue multiplicities do not add up to 2g");
    return ev;
}

namespace {

unsigned long euler_phi(unsigned long k)
{
    unsigned long r = k;
    for (unsigned long p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        while (k % p == 0) k /= p;
        r -= r / p;
    }
    if (k > 1) r -= r / k;
    return r;
}

RationalPoly x_power_mod(unsigned long k, const RationalPoly& q)
{
    RationalPoly result = RationalPoly::constant(1) % q;
    RationalPoly base = RationalPoly::x() % q;
    while (k) {
        if (k & 1UL) result = (result * base) % q;
        k >>= 1UL;
        if (k) base = (base * base) % q;
    }
    return result;
}

}  // namespace

std::optional<unsigned long> cyclotomic_order(const RationalPoly& q)
{
    if (!q.is_monic() || !q.has_integer_coefficients()) return std::nullopt;
    auto n = static_cast<unsigned long>(q.degree());
    if (n == 0 || abs(q.coeff(0)) != 1) return std::nullopt;
    if (n > 1 && !is_reciprocal(q)) return std::nullopt;
    // phi(k) >= sqrt(k/2), so phi(k) = n forces k <= 2 n^2
    for (unsigned long k = 1; k <= 2 * n * n + 2; ++k) {
        if (euler_phi(k) != n) continue;
        if (x_power_mod(k, q) == RationalPoly::constant(1)) return k;
    }
    return std::nullopt;
}

Integer fixed_points_via_eigenvalues(const EigenvalueMultiset& ev, unsigned long n)
{
    if (n < 1 || n > max_iterate) fail(ErrorKind::validation, "iterate index must lie in [1, " + std::to_string(max_iterate) + "]");
    double bits = 64;
    long start = default_precision;
    for (const auto& g : ev.groups) {
        if (auto k = cyclotomic_order(g.factor); k && n % *k == 0) return 0;
        start = std::max(start, g.roots.precision);
        for (const auto& r : g.roots.roots) {
            double m = std::hypot(r.re_mid.to_double(), r.im_mid.to_double());
            bits += g.multiplicity * static_cast<double>(n) * std::log2(1.0 + m);
        }
    }
    long prec = start;
    while (prec < bits + 64) prec *= 2;
    long cap = std::max<long>(max_precision, 4 * static_cast<long>(bits));
    for (; prec <= cap; prec *= 2) {
        ComplexBall prod = ComplexBall::exact(1, prec);
        for (const auto& g : ev.groups) {
            std::vector<ComplexEnclosure> roots =
                prec <= g.roots.precision ? g.roots.roots : isolate_roots(g.factor, prec);
            for (const auto& r : roots) {
                ComplexBall t = ComplexBall::exact(1, prec) - r.ball().pow(n);
                prod = prod * t.pow(static_cast<unsigned long>(g.multiplicity));
            }
        }
        Ball v = prod.re().abs();
        if (mpfr_cmp_d(v.rad().get(), 0.25) >= 0) continue;
        BigFloat rounded(prec);
        mpfr_round(rounded.get(), v.mid().get());
        Integer z;
        mpfr_get_z(z.get_mpz_t(), rounded.get(), MPFR_RNDN);
        if (!v.contains(Rational(z)) || !prod.im().contains(0))
            fail(ErrorKind::internal, "eigenvalue product does not enclose an integer");
        return z;
    }
    fail(ErrorKind::precision_exhausted, "fixed-point product not resolved at the precision cap");
}

Integer companion_oracle(const RationalPoly& p, unsigned long n)
{
    if (p.degree() < 1) fail(ErrorKind::validation, "companion oracle needs a nonconstant polynomial");
    if (!p.has_integer_coefficients() || abs(p.leading()) != 1)
        fail(ErrorKind::non_integral_element, "companion oracle needs an integral polynomial with leading coefficient +-1");
    RationalPoly monic = p.monic();
    auto m = static_cast<std::size_t>(monic.degree());
    IntegerMatrix big(2 * m, 2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Integer c = 0;
            if (j == m - 1)
                c = -monic.coeff(i).get_num();
            else if (i == j + 1)
                c = 1;
            big(2 * i, 2 * j) = c;
            big(2 * i + 1, 2 * j + 1) = c;
        }
    IntegerMatrix diff = IntegerMatrix::identity(2 * m) - matrix_power(big, n);
    return abs(determinant(diff));
}

}  // namespace endoscope
