#include "endoscope/classify.hpp"

#include <cmath>
#include <functional>
#include <numeric>

#include "endoscope/error.hpp"
#include "endoscope/factor.hpp"
#include "endoscope/symmetric.hpp"

namespace endoscope {

const char* to_string(AlbertKind kind) noexcept
{
    switch (kind) {
        case AlbertKind::TotallyRealField: return "TotallyRealField";
        case AlbertKind::CMField: return "CMField";
        case AlbertKind::TotallyDefiniteQuaternion: return "TotallyDefiniteQuaternion";
        case AlbertKind::TotallyIndefiniteQuaternion: return "TotallyIndefiniteQuaternion";
    }
    return "TotallyRealField";
}

const char* to_string(GrowthClass c) noexcept
{
    switch (c) {
        case GrowthClass::Periodic: return "Periodic";
        case GrowthClass::ExponentialPure: return "ExponentialPure";
        case GrowthClass::ExponentialMixed: return "ExponentialMixed";
        case GrowthClass::UnitCircleNonTorsionOnly: return "UnitCircleNonTorsionOnly";
    }
    return "Periodic";
}

AlbertType admissibility_check(const EndomorphismSpec& spec)
{
    if (spec.g < 1) fail(ErrorKind::validation, "dimension g must be positive");
    AlbertType t{AlbertKind::TotallyRealField, spec.d(), spec.e()};
    int e = t.e;
    if (spec.is_quaternion()) {
        const QuatElement& f = spec.quat_element();
        if (f.is_zero()) fail(ErrorKind::validation, "endomorphism must be nonzero");
        Definiteness kind = definiteness(*f.algebra()).kind;
        if (kind == Definiteness::Mixed)
            fail(ErrorKind::not_simple_albert_type, "quaternion algebra is neither totally definite nor totally indefinite");
        t.kind = kind == Definiteness::TotallyDefinite ? AlbertKind::TotallyDefiniteQuaternion
                                                       : AlbertKind::TotallyIndefiniteQuaternion;
        if (spec.g % (2 * e) != 0)
            fail(ErrorKind::divisibility_violation, "2e = " + std::to_string(2 * e) + " does not divide g = " + std::to_string(spec.g));
    } else {
        const NFElement& f = spec.field_element();
        if (f.is_zero()) fail(ErrorKind::validation, "endomorphism must be nonzero");
        FieldKind kind = f.field()->field_type().kind;
        if (kind == FieldKind::Other)
            fail(ErrorKind::not_simple_albert_type, "field is neither totally real nor CM");
        if (kind == FieldKind::TotallyReal) {
            t.kind = AlbertKind::TotallyRealField;
            if (spec.g % e != 0)
                fail(ErrorKind::divisibility_violation, "e = " + std::to_string(e) + " does not divide g = " + std::to_string(spec.g));
        } else {
            // a CM field of degree e acts on varieties of dimension divisible by e/2
            t.kind = AlbertKind::CMField;
            if (spec.g % (e / 2) != 0)
                fail(ErrorKind::divisibility_violation, "e/2 = " + std::to_string(e / 2) + " does not divide g = " + std::to_string(spec.g));
        }
    }
    if (!rational_charpoly(spec).has_integer_coefficients())
        fail(ErrorKind::non_integral_element, "characteristic polynomial over Q is not integral");
    return t;
}

std::optional<unsigned long> is_root_of_unity(const RationalPoly& q)
{
    if (!q.is_monic() || !q.has_integer_coefficients())
        fail(ErrorKind::non_integral_element, "root-of-unity test needs a monic integer polynomial");
    IrreducibleRoots r = analyze_irreducible(q);
    for (int side : r.circle_side)
        if (side != 0) return std::nullopt;
    auto k = cyclotomic_order(q);
    if (!k) fail(ErrorKind::internal, "integral polynomial with all roots on the unit circle is not cyclotomic");
    return k;
}

namespace {

/* Exact periodicity criterion for the three dichotomy types; nullopt for
 * indefinite quaternions, where no such criterion applies. */
std::optional<std::pair<bool, std::string>> exact_periodic(const EndomorphismSpec& spec, AlbertKind kind)
{
    switch (kind) {
        case AlbertKind::TotallyRealField: {
            const NFElement& f = spec.field_element();
            bool p = f.is_rational() && abs(f.rational_value()) == 1;
            return std::make_pair(p, std::string(p ? "f = +-1" : "f != +-1"));
        }
        case AlbertKind::CMField: {
            const NFElement& f = spec.field_element();
            RationalPoly conj = f.field()->field_type().conj_automorphism->coords();
            NFElement fbar(f.field(), f.coords().compose(conj));
            bool p = f * fbar == NFElement::from_rational(f.field(), 1);
            return std::make_pair(p, std::string(p ? "f * conj(f) = 1" : "f * conj(f) != 1"));
        }
        case AlbertKind::TotallyDefiniteQuaternion: {
            NFElement n = reduced_norm(spec.quat_element());
            bool p = n == NFElement::from_rational(n.field(), 1);
            return std::make_pair(p, std::string(p ? "Nrd(f) = 1" : "Nrd(f) != 1"));
        }
        case AlbertKind::TotallyIndefiniteQuaternion: return std::nullopt;
    }
    return std::nullopt;
}

struct SpectrumSummary {
    bool off = false;
    bool on_torsion = false;
    bool on_nontorsion = false;
    unsigned long order_lcm = 1;
};

SpectrumSummary summarize(const EigenvalueMultiset& ev)
{
    SpectrumSummary s;
    for (const auto& g : ev.groups) {
        bool all_on = true, any_on = false;
        for (int side : g.roots.circle_side) {
            if (side != 0) {
                s.off = true;
                all_on = false;
            } else {
                any_on = true;
            }
        }
        if (!any_on) continue;
        std::optional<unsigned long> k = all_on ? cyclotomic_order(g.factor) : std::nullopt;
        if (k) {
            s.on_torsion = true;
            s.order_lcm = std::lcm(s.order_lcm, *k);
        } else {
            s.on_nontorsion = true;
        }
    }
    return s;
}

GrowthClass growth_from_spectrum(const SpectrumSummary& s)
{
    if (!s.off && !s.on_nontorsion) return GrowthClass::Periodic;
    if (!s.off) return GrowthClass::UnitCircleNonTorsionOnly;
    if (s.on_torsion || s.on_nontorsion) return GrowthClass::ExponentialMixed;
    return GrowthClass::ExponentialPure;
}

unsigned long minimal_period(const EndomorphismSpec& spec, unsigned long bound)
{
    std::vector<Integer> fix(3 * bound + 1);
    for (unsigned long n = 1; n <= 3 * bound; ++n) fix[n] = fixed_points_exact(spec, n);
    for (unsigned long p = 1; p <= bound; ++p) {
        if (bound % p) continue;
        bool ok = true;
        for (unsigned long n = 1; n + p <= 3 * bound && n <= 2 * bound && ok; ++n) ok = fix[n] == fix[n + p];
        if (ok) return p;
    }
    fail(ErrorKind::internal, "fixed-point sequence is not periodic with the root-of-unity period");
}

}  // namespace

GrowthReport classify_growth(const EndomorphismSpec& spec, long precision_bits)
{
    GrowthReport r{admissibility_check(spec), GrowthClass::Periodic, std::nullopt, false, ""};
    EigenvalueMultiset ev = rational_eigenvalues(spec, precision_bits);
    SpectrumSummary s = summarize(ev);
    GrowthClass spectral = growth_from_spectrum(s);
    auto exact = exact_periodic(spec, r.albert.kind);
    if (exact) {
        bool periodic = exact->first;
        GrowthClass expected = periodic ? GrowthClass::Periodic : GrowthClass::ExponentialPure;
        if (spectral != expected)
            fail(ErrorKind::internal, std::string("exact criterion (") + exact->second + ") disagrees with eigenvalue class " +
                                          to_string(spectral));
        r.growth = expected;
        r.witness = exact->second;
    } else {
        r.growth = spectral;
        r.witness = "eigenvalue enclosures";
    }
    r.unit_circle_roots_of_unity = s.on_torsion;
    if (r.growth == GrowthClass::Periodic) r.period = minimal_period(spec, s.order_lcm);
    return r;
}

bool is_automorphism(const EndomorphismSpec& spec)
{
    admissibility_check(spec);
    Rational n = spec.is_quaternion() ? norm(reduced_norm(spec.quat_element())) : norm(spec.field_element());
    return abs(n) == 1;
}

SalemReport is_salem_polynomial(const RationalPoly& p, long precision_bits)
{
    if (!p.is_monic() || !p.has_integer_coefficients())
        fail(ErrorKind::non_integral_element, "Salem test needs a monic integer polynomial");
    SalemReport r;
    if (p.degree() < 4 || p.degree() % 2 != 0) {
        r.reason = "degree must be even and at least 4";
        return r;
    }
    int sign = 0;
    if (!is_reciprocal(p, &sign) || sign != 1) {
        r.reason = "not reciprocal";
        return r;
    }
    if (!is_irreducible(p)) {
        r.reason = "reducible";
        return r;
    }
    IrreducibleRoots a = analyze_irreducible(p, precision_bits);
    int real_out = 0, real_in = 0, on = 0, other = 0;
    double dev = 0;
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        const ComplexEnclosure& z = a.roots[i];
        int side = a.circle_side[i];
        if (side == 0) {
            ++on;
            BigFloat m(z.precision());
            mpfr_hypot(m.get(), z.re_mid.get(), z.im_mid.get(), MPFR_RNDU);
            mpfr_sub_ui(m.get(), m.get(), 1, MPFR_RNDU);
            mpfr_abs(m.get(), m.get(), MPFR_RNDU);
            mpfr_add(m.get(), m.get(), z.radius.get(), MPFR_RNDU);
            dev = std::max(dev, mpfr_get_d(m.get(), MPFR_RNDU));
        } else if (z.certified_real && side > 0 && z.re_mid.sign() > 0) {
            ++real_out;
            r.lambda = z;
        } else if (z.certified_real && side < 0 && z.re_mid.sign() > 0) {
            ++real_in;
            r.lambda_inv = z;
        } else {
            ++other;
        }
    }
    r.unit_circle_deviation = dev;
    if (real_out != 1 || real_in != 1 || other != 0 || on == 0) {
        r.reason = "root configuration is not of Salem type";
        r.lambda.reset();
        r.lambda_inv.reset();
        return r;
    }
    // reciprocity pairs the two real roots exactly; the enclosures must agree
    Ball prod = r.lambda->ball().re() * r.lambda_inv->ball().re();
    if (!prod.contains(1)) fail(ErrorKind::internal, "real Salem roots are not reciprocal");
    r.reciprocal_pair = true;
    r.is_salem = true;
    r.reason = "reciprocal, irreducible, one root outside the unit circle, " + std::to_string(on) + " on it";
    return r;
}

namespace {

using Target = std::function<ComplexBall(long)>;

RationalPoly select_factor(const RationalPoly& p, const Target& target)
{
    std::vector<RationalPoly> cands;
    for (const auto& f : factor_over_q(p)) cands.push_back(f.factor);
    if (cands.size() == 1) return cands.front();
    return cands[match_root(cands, target).candidate];
}

/* product of the roots of g outside the unit circle, at precision prec */
ComplexBall outside_product(const EigenvalueGroup& g, long prec)
{
    std::vector<ComplexEnclosure> roots = refine_roots(g.factor, g.roots.roots, prec);
    ComplexBall prod = ComplexBall::exact(1, prec);
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (g.roots.circle_side[i] > 0) prod = prod * roots[i].ball();
    return prod;
}

ComplexBall real_abs(const ComplexBall& z) { return {z.re().abs(), Ball(z.precision())}; }

}  // namespace

EntropyReport entropy(const EndomorphismSpec& spec, long precision_bits)
{
    AlbertType albert = admissibility_check(spec);
    EigenvalueMultiset ev = rational_eigenvalues(spec, precision_bits);
    EntropyReport rep;
    RationalPoly acc{-1, 1};
    std::vector<std::pair<const EigenvalueGroup*, int>> parts;
    for (const auto& g : ev.groups) {
        int s = 0;
        for (int side : g.roots.circle_side)
            if (side > 0) ++s;
        if (s == 0) continue;
        parts.emplace_back(&g, s);
    }
    Target running = [](long prec) { return ComplexBall::exact(1, prec); };
    for (const auto& [gp, s] : parts) {
        const EigenvalueGroup& g = *gp;
        Target q_target = [&g](long prec) { return outside_product(g, prec); };
        RationalPoly h = select_factor(subset_products_poly(g.factor, static_cast<unsigned>(s)), q_target);
        // the product is real; flip to its absolute value when negative
        bool negative = false;
        for (long prec = precision_bits;; prec *= 2) {
            if (prec > max_precision) fail(ErrorKind::precision_exhausted, "sign of an eigenvalue product undecided");
            Ball re = outside_product(g, prec).re();
            if (re.is_negative()) {
                negative = true;
                break;
            }
            if (re.is_positive()) break;
        }
        if (negative) h = h.scale_variable(-1).monic();
        int m = g.multiplicity;
        Target part = [&g, m](long prec) { return real_abs(outside_product(g, prec)).pow(static_cast<unsigned long>(m)); };
        if (m > 1) h = select_factor(root_powers_poly(h, static_cast<unsigned>(m)), part);
        Target next = [running, part](long prec) { return running(prec) * part(prec); };
        acc = acc == RationalPoly{-1, 1} ? h : select_factor(pair_products_poly(acc, h), next);
        running = next;
    }
    rep.gamma_minpoly = acc;
    rep.positive = !parts.empty();
    rep.gamma = running(precision_bits).re();
    rep.value = rep.positive ? rep.gamma.log() : Ball(precision_bits);
    if (rep.gamma_minpoly.degree() >= 4 && rep.gamma_minpoly.has_integer_coefficients())
        rep.is_salem = is_salem_polynomial(rep.gamma_minpoly, precision_bits).is_salem;

    if (auto exact = exact_periodic(spec, albert.kind)) {
        if (exact->first == rep.positive)
            fail(ErrorKind::internal, "entropy sign disagrees with the exact criterion (" + exact->second + ")");
    }
    return rep;
}

namespace {

/* polynomial square root via factorization; p must be a perfect square */
RationalPoly poly_sqrt(const RationalPoly& p)
{
    RationalPoly r = RationalPoly::constant(1);
    for (const auto& f : factor_over_q(p)) {
        if (f.multiplicity % 2) fail(ErrorKind::internal, "characteristic polynomial is not a square");
        r *= f.factor.pow(static_cast<unsigned>(f.multiplicity / 2));
    }
    return r;
}

}  // namespace

StructureCertificate structure_certificate(const EntropyReport& report, const EndomorphismSpec& spec)
{
    AlbertType albert = admissibility_check(spec);
    if (albert.kind == AlbertKind::TotallyIndefiniteQuaternion)
        fail(ErrorKind::wrong_albert_type, "structure certificate does not apply to totally indefinite quaternion algebras");
    StructureCertificate cert;
    if (!report.positive) {
        cert.ok = report.gamma_minpoly == RationalPoly{-1, 1};
        cert.description = "gamma = 1";
        return cert;
    }
    int e = albert.e;
    // b lies in the maximal totally real subfield L0; gamma is a product of
    // conjugates of c = b^power over the embeddings where b exceeds 1
    RationalPoly charpoly_l0;
    std::string l0;
    if (albert.kind == AlbertKind::TotallyRealField) {
        const NFElement& f = spec.field_element();
        NFElement c = (f * f).pow(spec.g / e);
        charpoly_l0 = field_charpoly(c);
        l0 = "Q[x]/(" + f.field()->minpoly().to_string() + ")";
    } else if (albert.kind == AlbertKind::CMField) {
        const NFElement& f = spec.field_element();
        FieldTypeReport ft = f.field()->field_type();
        NFElement b = f * NFElement(f.field(), f.coords().compose(ft.conj_automorphism->coords()));
        NFElement c = b.pow(2 * spec.g / e);
        charpoly_l0 = poly_sqrt(field_charpoly(c));
        l0 = "Q[x]/(" + ft.max_real_subfield_minpoly->to_string() + ")";
    } else {
        const QuatElement& f = spec.quat_element();
        NFElement c = reduced_norm(f).pow(spec.g / e);
        charpoly_l0 = field_charpoly(c);
        l0 = "Q[x]/(" + f.algebra()->base()->minpoly().to_string() + ")";
    }
    // count conjugates of c above 1 (c is totally positive)
    unsigned s = 0;
    for (const auto& fac : factor_over_q(charpoly_l0)) {
        IrreducibleRoots r = analyze_irreducible(fac.factor);
        for (std::size_t i = 0; i < r.roots.size(); ++i) {
            if (!r.roots[i].certified_real || r.roots[i].re_mid.sign() < 0)
                fail(ErrorKind::internal, "conjugate of a totally positive element is not positive");
            if (r.circle_side[i] > 0) s += static_cast<unsigned>(fac.multiplicity);
        }
    }
    RationalPoly products = subset_products_poly(charpoly_l0, s);
    bool divides_ok = divides(report.gamma_minpoly, products);
    bool all_real = true;
    for (const auto& r : isolate_roots(report.gamma_minpoly)) all_real = all_real && r.certified_real;
    cert.ok = divides_ok && all_real;
    cert.description = "gamma_minpoly " + std::string(divides_ok ? "divides" : "does not divide") + " the " +
                       std::to_string(s) + "-fold conjugate product polynomial of an element of " + l0 +
                       (all_real ? "; all conjugates of gamma are real" : "; gamma has non-real conjugates");
    return cert;
}

}  // namespace endoscope
