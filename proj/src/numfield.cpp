#include "endoscope/numfield.hpp"

#include <cmath>

#include "endoscope/error.hpp"
#include "endoscope/factor.hpp"

namespace endoscope {

const char* to_string(FieldKind kind) noexcept
{
    switch (kind) {
        case FieldKind::TotallyReal: return "TotallyReal";
        case FieldKind::CM: return "CM";
        case FieldKind::Other: return "Other";
    }
    return "Other";
}

FieldPtr NumberField::create(const RationalPoly& minpoly)
{
    if (minpoly.degree() < 1) fail(ErrorKind::validation, "field polynomial must have positive degree");
    if (minpoly.degree() > max_factor_degree)
        fail(ErrorKind::degree_cap, "field degree above " + std::to_string(max_factor_degree));
    if (!is_irreducible(minpoly)) fail(ErrorKind::validation, "field polynomial " + minpoly.to_string() + " is reducible");
    return std::make_shared<NumberField>(Token{}, minpoly.monic());
}

NumberField::NumberField(Token, RationalPoly minpoly) : minpoly_(std::move(minpoly))
{
    embeddings_ = isolate_roots(minpoly_, default_precision);
    for (const auto& r : embeddings_)
        if (r.certified_real) ++real_count_;
    totally_real_ = real_count_ == degree();
}

std::vector<ComplexEnclosure> NumberField::embeddings(long precision_bits) const
{
    return refine_roots(minpoly_, embeddings_, precision_bits);
}

NFElement::NFElement(FieldPtr field, const RationalPoly& coords) : field_(std::move(field))
{
    if (!field_) fail(ErrorKind::validation, "element without a field");
    coords_ = coords % field_->minpoly();
}

NFElement NFElement::from_rational(FieldPtr field, const Rational& q)
{
    return NFElement(std::move(field), RationalPoly::constant(q));
}

NFElement NFElement::generator(FieldPtr field) { return NFElement(std::move(field), RationalPoly::x()); }

Rational NFElement::rational_value() const
{
    if (!is_rational()) fail(ErrorKind::validation, "element is not rational");
    return coords_.coeff(0);
}

namespace {

void check_parent(const NFElement& a, const NFElement& b)
{
    if (!a.field()->same_as(*b.field())) fail(ErrorKind::parent_mismatch, "elements of different number fields");
}

}  // namespace

NFElement NFElement::operator-() const { return NFElement(field_, -coords_); }

NFElement operator+(const NFElement& a, const NFElement& b)
{
    check_parent(a, b);
    return NFElement(a.field_, a.coords_ + b.coords_);
}

NFElement operator-(const NFElement& a, const NFElement& b)
{
    check_parent(a, b);
    return NFElement(a.field_, a.coords_ - b.coords_);
}

NFElement operator*(const NFElement& a, const NFElement& b)
{
    check_parent(a, b);
    return NFElement(a.field_, a.coords_ * b.coords_);
}

NFElement operator*(const NFElement& a, const Rational& c) { return NFElement(a.field_, a.coords_ * c); }

NFElement operator/(const NFElement& a, const NFElement& b)
{
    check_parent(a, b);
    return a * b.inverse();
}

bool operator==(const NFElement& a, const NFElement& b)
{
    return a.field_->same_as(*b.field_) && a.coords_ == b.coords_;
}

NFElement NFElement::inverse() const
{
    if (is_zero()) fail(ErrorKind::division_by_zero, "inverse of zero in a number field");
    ExtendedGcd g = extended_gcd(coords_, field_->minpoly());
    // minpoly is irreducible, so the gcd is 1
    return NFElement(field_, g.s);
}

NFElement NFElement::pow(long exp) const
{
    if (exp < 0) return inverse().pow(-exp);
    NFElement result = from_rational(field_, 1);
    NFElement base = *this;
    auto e = static_cast<unsigned long>(exp);
    while (e) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e) base = base * base;
    }
    return result;
}

NFElement NFElement::apply(const RationalPoly& p) const
{
    NFElement acc = from_rational(field_, 0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * *this + from_rational(field_, p.coeffs()[i]);
    return acc;
}

ComplexBall NFElement::embed(const ComplexEnclosure& root) const { return evaluate(coords_.coeffs(), root.ball()); }

RationalMatrix multiplication_matrix(const NFElement& x)
{
    auto e = static_cast<std::size_t>(x.field()->degree());
    RationalMatrix m(e, e);
    NFElement col = x;
    NFElement theta = NFElement::generator(x.field());
    for (std::size_t j = 0; j < e; ++j) {
        for (std::size_t i = 0; i < e; ++i) m(i, j) = col.coords().coeff(i);
        col = col * theta;
    }
    return m;
}

RationalPoly field_charpoly(const NFElement& x) { return charpoly(multiplication_matrix(x)); }

RationalPoly minimal_polynomial(const NFElement& x) { return squarefree_part(field_charpoly(x)); }

Rational norm(const NFElement& x) { return determinant(multiplication_matrix(x)); }

Rational trace(const NFElement& x)
{
    RationalMatrix m = multiplication_matrix(x);
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

RelativeNormTrace norm_trace_to_subfield(const NFElement& x, const NFElement& s)
{
    check_parent(x, s);
    const FieldPtr& f = x.field();
    auto e = static_cast<std::size_t>(f->degree());
    auto l = static_cast<std::size_t>(minimal_polynomial(s).degree());
    if (e % l != 0) fail(ErrorKind::internal, "subfield degree does not divide the field degree");
    std::size_t r = e / l;
    NFElement theta = NFElement::generator(f);
    // Q-basis s^a theta^b, indexed a*r + b
    RationalMatrix basis(e, e);
    std::vector<NFElement> spow;
    for (std::size_t a = 0; a < l; ++a) spow.push_back(s.pow(static_cast<long>(a)));
    for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            NFElement v = spow[a] * theta.pow(static_cast<long>(b));
            for (std::size_t i = 0; i < e; ++i) basis(i, a * r + b) = v.coords().coeff(i);
        }
    std::vector<std::vector<NFElement>> m(r, std::vector<NFElement>(r, NFElement::from_rational(f, 0)));
    for (std::size_t i = 0; i < r; ++i) {
        NFElement v = x * theta.pow(static_cast<long>(i));
        std::vector<Rational> rhs(e);
        for (std::size_t k = 0; k < e; ++k) rhs[k] = v.coords().coeff(k);
        auto y = solve(basis, rhs);
        if (!y) fail(ErrorKind::validation, "the given element does not generate a subfield basis");
        for (std::size_t b = 0; b < r; ++b) {
            NFElement c = NFElement::from_rational(f, 0);
            for (std::size_t a = 0; a < l; ++a) c = c + spow[a] * (*y)[a * r + b];
            m[i][b] = c;
        }
    }
    NFElement tr = NFElement::from_rational(f, 0);
    for (std::size_t i = 0; i < r; ++i) tr = tr + m[i][i];
    // determinant over the field by elimination
    NFElement det = NFElement::from_rational(f, 1);
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t piv = c;
        while (piv < r && m[piv][c].is_zero()) ++piv;
        if (piv == r) {
            det = NFElement::from_rational(f, 0);
            break;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        NFElement inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < r; ++i) {
            if (m[i][c].is_zero()) continue;
            NFElement fac = m[i][c] * inv;
            for (std::size_t j = c; j < r; ++j) m[i][j] = m[i][j] - fac * m[c][j];
        }
    }
    return {det, tr};
}

bool is_totally_real(const NumberField& f) { return f.is_totally_real(); }

std::optional<NFElement> square_root(const NFElement& y)
{
    const FieldPtr& f = y.field();
    if (y.is_rational()) {
        Rational r;
        if (perfect_square(y.rational_value(), &r)) return NFElement::from_rational(f, r);
        if (y.rational_value() < 0 || f->degree() == 1) return std::nullopt;
    }
    if (!f->is_totally_real()) return std::nullopt;
    if (!perfect_square(norm(y))) return std::nullopt;
    auto n = static_cast<std::size_t>(f->degree());
    for (long prec : {default_precision, 2 * default_precision}) {
        std::vector<ComplexEnclosure> roots = f->embeddings(prec);
        std::vector<Ball> s;
        bool undecided = false;
        for (const auto& r : roots) {
            Ball v = y.embed(r).re();
            if (v.is_negative()) return std::nullopt;
            if (!v.is_positive()) undecided = true;
            else s.push_back(v.sqrt());
        }
        if (undecided) continue;
        std::vector<std::vector<ComplexBall>> v(n, std::vector<ComplexBall>(n));
        for (std::size_t j = 0; j < n; ++j) {
            ComplexBall z = roots[j].ball();
            ComplexBall pw = ComplexBall::exact(1, prec);
            for (std::size_t k = 0; k < n; ++k) {
                v[j][k] = pw;
                pw = pw * z;
            }
        }
        Integer bound = pow(Integer(2), static_cast<unsigned long>(prec / 4));
        // the overall sign is irrelevant, so embedding 0 keeps the positive root
        for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
            std::vector<ComplexBall> rhs(n);
            for (std::size_t j = 0; j < n; ++j) {
                bool neg = j > 0 && ((mask >> (j - 1)) & 1U);
                rhs[j] = ComplexBall(neg ? -s[j] : s[j], Ball(prec));
            }
            auto sol = solve_ball_system(v, rhs);
            if (!sol) continue;
            std::vector<Rational> coeffs(n);
            for (std::size_t k = 0; k < n; ++k) coeffs[k] = rational_reconstruct((*sol)[k].re().mid(), bound);
            NFElement cand(f, RationalPoly(coeffs));
            if (cand * cand == y) return cand;
        }
    }
    return std::nullopt;
}

FieldTypeReport cm_structure(const NumberField& f) { return f.field_type(); }

FieldTypeReport NumberField::field_type() const
{
    std::call_once(type_once_, [this] { type_ = compute_type(); });
    FieldTypeReport report;
    report.kind = type_.kind;
    if (type_.kind == FieldKind::Other) return report;
    FieldPtr self = shared_from_this();
    report.conj_automorphism = NFElement(self, type_.conj);
    report.max_real_subfield_minpoly = type_.real_minpoly;
    report.max_real_generator = NFElement(self, type_.real_generator);
    return report;
}

namespace {

}  // namespace

std::optional<std::vector<ComplexBall>> solve_ball_system(std::vector<std::vector<ComplexBall>> a,
                                                          std::vector<ComplexBall> rhs)
{
    std::size_t n = rhs.size();
    try {
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            double best = -1;
            for (std::size_t i = c; i < n; ++i) {
                double v = a[i][c].abs2().to_double();
                if (v > best) {
                    best = v;
                    piv = i;
                }
            }
            std::swap(a[piv], a[c]);
            std::swap(rhs[piv], rhs[c]);
            for (std::size_t i = c + 1; i < n; ++i) {
                ComplexBall fac = a[i][c] / a[c][c];
                for (std::size_t j = c; j < n; ++j) a[i][j] = a[i][j] - fac * a[c][j];
                rhs[i] = rhs[i] - fac * rhs[c];
            }
        }
        std::vector<ComplexBall> x(n);
        for (std::size_t i = n; i-- > 0;) {
            ComplexBall acc = rhs[i];
            for (std::size_t j = i + 1; j < n; ++j) acc = acc - a[i][j] * x[j];
            x[i] = acc / a[i][i];
        }
        return x;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::precision_exhausted) return std::nullopt;
        throw;
    }
}

namespace {

/* Integer inside the ball, if the ball is narrow enough to pin one down. */
enum class Rounding { unique, none, ambiguous };
Rounding round_ball(const Ball& b, Integer* out)
{
    BigFloat lo = b.lower(), hi = b.upper();
    Integer fl, ce;
    mpfr_t t;
    mpfr_init2(t, lo.precision());
    mpfr_ceil(t, lo.get());
    mpfr_get_z(ce.get_mpz_t(), t, MPFR_RNDN);
    mpfr_floor(t, hi.get());
    mpfr_get_z(fl.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clear(t);
    if (ce > fl) {
        // no integer in [lo, hi]; trust it only if the ball is narrow
        BigFloat w(radius_precision);
        mpfr_sub(w.get(), hi.get(), lo.get(), MPFR_RNDU);
        return mpfr_cmp_ui(w.get(), 1) < 0 ? Rounding::none : Rounding::ambiguous;
    }
    if (ce == fl) {
        *out = ce;
        return Rounding::unique;
    }
    return Rounding::ambiguous;
}

}  // namespace

NumberField::CachedType NumberField::compute_type() const
{
    CachedType t;
    if (totally_real_) {
        t.kind = FieldKind::TotallyReal;
        t.conj = RationalPoly::x();
        t.real_minpoly = minpoly_;
        t.real_generator = RationalPoly::x();
        return t;
    }
    int e = degree();
    if (real_count_ > 0 || e % 2 != 0) return t;

    // integrality multiplier: coordinates of any automorphism image of the
    // generator have denominators dividing |disc(p_c)| * c
    Integer c = minpoly_.denominator_lcm();
    RationalPoly pc = minpoly_.scale_variable(Rational(1, 1) / Rational(c)) * Rational(pow(c, static_cast<unsigned long>(e)));
    Rational disc = resultant(pc, pc.derivative());
    Integer mult = abs(disc.get_num()) * c;

    std::optional<RationalPoly> g;
    for (long prec = default_precision; prec <= max_precision && !g; prec *= 2) {
        std::vector<ComplexEnclosure> roots = embeddings(prec);
        auto n = static_cast<std::size_t>(e);
        std::vector<std::vector<ComplexBall>> v(n, std::vector<ComplexBall>(n));
        std::vector<ComplexBall> rhs(n);
        for (std::size_t j = 0; j < n; ++j) {
            ComplexBall z = roots[j].ball();
            ComplexBall pw = ComplexBall::exact(1, prec);
            for (std::size_t k = 0; k < n; ++k) {
                v[j][k] = pw;
                pw = pw * z;
            }
            rhs[j] = z.conj();
        }
        auto sol = solve_ball_system(v, rhs);
        if (!sol) continue;
        std::vector<Rational> coeffs(n);
        bool ambiguous = false, impossible = false;
        Ball m = Ball::exact(Rational(mult), prec);
        for (std::size_t k = 0; k < n; ++k) {
            Integer z;
            Rounding r = round_ball((*sol)[k].re() * m, &z);
            if (r == Rounding::ambiguous) ambiguous = true;
            if (r == Rounding::none) impossible = true;
            if (r == Rounding::unique) coeffs[k] = make_rational(z, mult);
        }
        if (impossible) return t;
        if (ambiguous) continue;
        RationalPoly cand(coeffs);
        if (cand == RationalPoly::x()) return t;
        if (!(minpoly_.compose(cand) % minpoly_).is_zero()) return t;
        if (cand.compose(cand) % minpoly_ != RationalPoly::x()) return t;
        // each embedding must send cand(theta) to the conjugate root
        bool settled = true;
        for (std::size_t j = 0; j < n && settled; ++j) {
            ComplexBall val = evaluate(cand.coeffs(), roots[j].ball());
            ComplexBall target = roots[j].ball().conj();
            std::size_t hits = 0;
            bool right = false;
            for (const auto& r : roots) {
                if (!val.overlaps(r.ball())) continue;
                ++hits;
                right = r.ball().overlaps(target);
            }
            if (hits != 1) settled = false;
            else if (!right) fail(ErrorKind::internal, "interpolated conjugation does not match the embeddings");
        }
        if (settled) g = cand;
    }
    if (!g) fail(ErrorKind::precision_exhausted, "complex conjugation not decided at " + std::to_string(max_precision) + " bits");

    FieldPtr self = shared_from_this();
    NFElement theta = NFElement::generator(self);
    NFElement gt(self, *g);
    std::vector<NFElement> candidates{theta + gt, theta * gt, theta * theta + gt * gt};
    for (long k = 1; k <= 12; ++k) {
        NFElement a = theta + NFElement::from_rational(self, k);
        NFElement b = gt + NFElement::from_rational(self, k);
        candidates.push_back(a * b);
        candidates.push_back(a * a * theta + b * b * gt);
    }
    for (const auto& y : candidates) {
        RationalPoly mp = minimal_polynomial(y);
        if (mp.degree() != e / 2) continue;
        if (NFElement(self, y.coords().compose(*g)) != y) continue;
        if (!NumberField::create(mp)->is_totally_real()) continue;
        t.kind = FieldKind::CM;
        t.conj = *g;
        t.real_minpoly = mp;
        t.real_generator = y.coords();
        return t;
    }
    fail(ErrorKind::internal, "no generator found for the fixed field of the conjugation");
}

}  // namespace endoscope
