#include "endoscope/quaternion.hpp"

#include <map>
#include <numeric>

#include "endoscope/error.hpp"

namespace endoscope {

AlgebraPtr QuatAlgebra::create(const NFElement& alpha, const NFElement& beta)
{
    if (!alpha.field()->same_as(*beta.field())) fail(ErrorKind::parent_mismatch, "alpha and beta live in different fields");
    if (alpha.is_zero() || beta.is_zero()) fail(ErrorKind::validation, "alpha and beta must be nonzero");
    if (!alpha.field()->is_totally_real()) fail(ErrorKind::validation, "quaternion base field must be totally real");
    return std::make_shared<QuatAlgebra>(alpha.field(), alpha, NFElement(alpha.field(), beta.coords()));
}

QuatElement::QuatElement(AlgebraPtr algebra, NFElement a, NFElement b, NFElement c, NFElement d)
    : algebra_(std::move(algebra)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    const NumberField& f = *algebra_->base();
    for (const NFElement* x : {&a_, &b_, &c_, &d_})
        if (!x->field()->same_as(f)) fail(ErrorKind::parent_mismatch, "quaternion coordinate outside the base field");
}

QuatElement QuatElement::scalar(AlgebraPtr algebra, const NFElement& a)
{
    NFElement z = NFElement::from_rational(algebra->base(), 0);
    return {std::move(algebra), a, z, z, z};
}

QuatElement QuatElement::scalar(AlgebraPtr algebra, const Rational& a)
{
    NFElement s = NFElement::from_rational(algebra->base(), a);
    return scalar(std::move(algebra), s);
}

QuatElement QuatElement::i(AlgebraPtr algebra)
{
    NFElement z = NFElement::from_rational(algebra->base(), 0), o = NFElement::from_rational(algebra->base(), 1);
    return {std::move(algebra), z, o, z, z};
}

QuatElement QuatElement::j(AlgebraPtr algebra)
{
    NFElement z = NFElement::from_rational(algebra->base(), 0), o = NFElement::from_rational(algebra->base(), 1);
    return {std::move(algebra), z, z, o, z};
}

QuatElement QuatElement::k(AlgebraPtr algebra)
{
    NFElement z = NFElement::from_rational(algebra->base(), 0), o = NFElement::from_rational(algebra->base(), 1);
    return {std::move(algebra), z, z, z, o};
}

namespace {

void check_algebra(const QuatElement& x, const QuatElement& y)
{
    if (!x.algebra()->same_as(*y.algebra())) fail(ErrorKind::parent_mismatch, "elements of different quaternion algebras");
}

}  // namespace

QuatElement QuatElement::operator-() const { return {algebra_, -a_, -b_, -c_, -d_}; }

QuatElement operator+(const QuatElement& x, const QuatElement& y)
{
    check_algebra(x, y);
    return {x.algebra_, x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

QuatElement operator-(const QuatElement& x, const QuatElement& y)
{
    check_algebra(x, y);
    return {x.algebra_, x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

QuatElement operator*(const QuatElement& x, const QuatElement& y)
{
    check_algebra(x, y);
    const NFElement& al = x.algebra_->alpha();
    const NFElement& be = x.algebra_->beta();
    NFElement ab = al * be;
    NFElement a = x.a_ * y.a_ + al * x.b_ * y.b_ + be * x.c_ * y.c_ - ab * x.d_ * y.d_;
    NFElement b = x.a_ * y.b_ + x.b_ * y.a_ - be * x.c_ * y.d_ + be * x.d_ * y.c_;
    NFElement c = x.a_ * y.c_ + x.c_ * y.a_ + al * x.b_ * y.d_ - al * x.d_ * y.b_;
    NFElement d = x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ - x.c_ * y.b_;
    return {x.algebra_, a, b, c, d};
}

QuatElement operator*(const QuatElement& x, const NFElement& s) { return {x.algebra_, x.a_ * s, x.b_ * s, x.c_ * s, x.d_ * s}; }

bool operator==(const QuatElement& x, const QuatElement& y)
{
    return x.algebra_->same_as(*y.algebra_) && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
}

QuatElement QuatElement::pow(unsigned long exp) const
{
    QuatElement result = scalar(algebra_, 1);
    QuatElement base = *this;
    while (exp) {
        if (exp & 1UL) result = result * base;
        exp >>= 1UL;
        if (exp) base = base * base;
    }
    return result;
}

QuatElement conjugate(const QuatElement& x) { return {x.algebra(), x.a(), -x.b(), -x.c(), -x.d()}; }

NFElement reduced_trace(const QuatElement& x) { return x.a() * Rational(2); }

NFElement reduced_norm(const QuatElement& x)
{
    const NFElement& al = x.algebra()->alpha();
    const NFElement& be = x.algebra()->beta();
    return x.a() * x.a() - al * x.b() * x.b() - be * x.c() * x.c() + al * be * x.d() * x.d();
}

std::vector<NFElement> reduced_charpoly_over_f(const QuatElement& x)
{
    FieldPtr f = x.algebra()->base();
    return {reduced_norm(x), -reduced_trace(x), NFElement::from_rational(f, 1)};
}

RationalPoly reduced_charpoly_over_q(const QuatElement& x)
{
    FieldPtr f = x.algebra()->base();
    NFElement t = reduced_trace(x), n = reduced_norm(x);
    int e = f->degree();
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= 2 * e; ++k) {
        NFElement x0 = NFElement::from_rational(f, k);
        xs.emplace_back(k);
        ys.push_back(norm(x0 * x0 - t * x0 + n));
    }
    return interpolate(xs, ys);
}

RationalPoly reduced_charpoly_over_q_resultant(const QuatElement& x)
{
    FieldPtr f = x.algebra()->base();
    RationalPoly t = reduced_trace(x).coords(), n = reduced_norm(x).coords();
    int e = f->degree();
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= 2 * e; ++k) {
        Rational x0 = -e + k;
        RationalPoly r = RationalPoly::constant(x0 * x0) - t * x0 + n;
        xs.push_back(x0);
        ys.push_back(resultant(f->minpoly(), r));
    }
    return interpolate(xs, ys);
}

RationalPoly regular_representation_charpoly(const QuatElement& x)
{
    const AlgebraPtr& alg = x.algebra();
    FieldPtr f = alg->base();
    auto e = static_cast<std::size_t>(f->degree());
    std::size_t n = 4 * e;
    RationalMatrix m(n, n);
    NFElement theta = NFElement::generator(f);
    std::vector<QuatElement> units{QuatElement::scalar(alg, 1), QuatElement::i(alg), QuatElement::j(alg), QuatElement::k(alg)};
    for (std::size_t q = 0; q < 4; ++q)
        for (std::size_t k = 0; k < e; ++k) {
            QuatElement v = x * (units[q] * theta.pow(static_cast<long>(k)));
            const NFElement* parts[4] = {&v.a(), &v.b(), &v.c(), &v.d()};
            for (std::size_t p = 0; p < 4; ++p)
                for (std::size_t r = 0; r < e; ++r) m(p * e + r, q * e + k) = parts[p]->coords().coeff(r);
        }
    return charpoly(m);
}

NFElement discriminant_t(const QuatElement& x)
{
    const NFElement& al = x.algebra()->alpha();
    const NFElement& be = x.algebra()->beta();
    return x.b() * x.b() * al + x.c() * x.c() * be - x.d() * x.d() * al * be;
}

RationalPoly sqrt_t_minpoly(const QuatElement& x)
{
    FieldPtr f = x.algebra()->base();
    RationalPoly t = discriminant_t(x).coords();
    int e = f->degree();
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= 2 * e; ++k) {
        Rational x0 = k;
        xs.push_back(x0);
        ys.push_back(resultant(f->minpoly(), RationalPoly::constant(x0 * x0) - t));
    }
    return squarefree_part(interpolate(xs, ys));
}

const char* to_string(Definiteness kind) noexcept
{
    switch (kind) {
        case Definiteness::TotallyDefinite: return "TotallyDefinite";
        case Definiteness::TotallyIndefinite: return "TotallyIndefinite";
        case Definiteness::Mixed: return "Mixed";
    }
    return "Mixed";
}

std::vector<int> embedding_signs(const NFElement& x)
{
    const FieldPtr& f = x.field();
    if (!f->is_totally_real()) fail(ErrorKind::validation, "signs need a totally real field");
    if (x.is_rational()) return std::vector<int>(static_cast<std::size_t>(f->degree()), sgn(x.rational_value()));
    for (long prec = default_precision; prec <= max_precision; prec *= 2) {
        std::vector<int> out;
        for (const auto& r : f->embeddings(prec)) {
            Ball v = x.embed(r).re();
            if (v.is_positive())
                out.push_back(1);
            else if (v.is_negative())
                out.push_back(-1);
            else
                break;
        }
        if (out.size() == static_cast<std::size_t>(f->degree())) return out;
    }
    fail(ErrorKind::precision_exhausted, "embedding sign undecided at " + std::to_string(max_precision) + " bits");
}

DefinitenessReport definiteness(const QuatAlgebra& b)
{
    DefinitenessReport r;
    std::vector<int> sa = embedding_signs(b.alpha()), sb = embedding_signs(b.beta());
    bool all_definite = true, all_indefinite = true;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        r.per_embedding_signs.emplace_back(sa[i], sb[i]);
        bool definite = sa[i] < 0 && sb[i] < 0;
        all_definite = all_definite && definite;
        all_indefinite = all_indefinite && !definite;
    }
    r.kind = all_definite ? Definiteness::TotallyDefinite
                          : (all_indefinite ? Definiteness::TotallyIndefinite : Definiteness::Mixed);
    return r;
}

const char* to_string(SplitStatus s) noexcept
{
    switch (s) {
        case SplitStatus::witness: return "witness";
        case SplitStatus::division: return "division";
        case SplitStatus::split: return "split";
        case SplitStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

namespace {

/* Zero divisor of the form a + b i + j, i.e. beta + alpha b^2 = a^2, which
 * exists exactly when the algebra splits (alpha not a square). */
std::optional<QuatElement> search_norm_form(const AlgebraPtr& alg, int bound)
{
    FieldPtr f = alg->base();
    auto e = static_cast<std::size_t>(f->degree());
    const NFElement& al = alg->alpha();
    const NFElement& be = alg->beta();
    NFElement one = NFElement::from_rational(f, 1), zero = NFElement::from_rational(f, 0);
    auto try_b = [&](const NFElement& b) -> std::optional<QuatElement> {
        NFElement y = be + al * b * b;
        if (y.is_zero()) return QuatElement(alg, zero, b, one, zero);
        if (!perfect_square(norm(y))) return std::nullopt;
        auto a = square_root(y);
        if (!a) return std::nullopt;
        QuatElement w(alg, *a, b, one, zero);
        if (!reduced_norm(w).is_zero()) fail(ErrorKind::internal, "split witness failed verification");
        return w;
    };
    for (int h = 1; h <= bound; ++h) {
        for (int den = 1; den <= h; ++den) {
            std::vector<int> num(e, -h);
            while (true) {
                int top = den;
                Integer g = den;
                for (int v : num) {
                    top = std::max(top, std::abs(v));
                    g = gcd(g, Integer(v));
                }
                if (top == h && g == 1) {
                    std::vector<Rational> c;
                    for (int v : num) c.push_back(make_rational(v, den));
                    if (auto w = try_b(NFElement(f, RationalPoly(c)))) return w;
                }
                std::size_t i = 0;
                while (i < e && num[i] == h) num[i++] = -h;
                if (i == e) break;
                ++num[i];
            }
        }
    }
    return std::nullopt;
}

}  // namespace

SplitReport split_witness_search(const AlgebraPtr& alg, int height_bound)
{
    if (height_bound < 1) fail(ErrorKind::validation, "height bound must be at least 1");
    FieldPtr f = alg->base();
    NFElement zero = NFElement::from_rational(f, 0), one = NFElement::from_rational(f, 1);
    SplitReport r;
    if (auto s = square_root(alg->alpha())) {
        r.status = SplitStatus::witness;
        r.witness = QuatElement(alg, *s, one, zero, zero);
        r.method = "alpha is a square";
        return r;
    }
    if (auto s = square_root(alg->beta())) {
        r.status = SplitStatus::witness;
        r.witness = QuatElement(alg, *s, zero, one, zero);
        r.method = "beta is a square";
        return r;
    }
    if (definiteness(*alg).kind == Definiteness::TotallyDefinite) {
        r.status = SplitStatus::division;
        r.method = "totally definite";
        return r;
    }
    bool over_q = f->degree() == 1;
    if (over_q && is_division_over_q(alg->alpha().rational_value(), alg->beta().rational_value())) {
        r.status = SplitStatus::division;
        r.method = "hilbert symbol";
        return r;
    }
    if (auto w = search_norm_form(alg, height_bound)) {
        r.status = SplitStatus::witness;
        r.witness = *w;
        r.method = "norm form search";
        return r;
    }
    r.status = over_q ? SplitStatus::split : SplitStatus::inconclusive;
    r.method = over_q ? "hilbert symbol" : "no witness within bound";
    return r;
}

namespace {

bool probably_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto step = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = abs(x - y);
            d = gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out)
{
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    Integer m = n;
    for (unsigned long p = 2; p < 10000; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Integer(p)];
            m /= p;
        }
        if (m == 1) return;
    }
    if (probably_prime(m)) {
        ++out[m];
        return;
    }
    Integer d = pollard_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

/* squarefree integer in the same square class as q */
Integer square_class(const Rational& q)
{
    if (q == 0) fail(ErrorKind::validation, "Hilbert symbol of zero");
    Integer n = abs(q.get_num() * q.get_den());
    std::map<Integer, int> f;
    factor_into(n, f);
    Integer r = 1;
    for (const auto& [p, e] : f)
        if (e % 2) r *= p;
    return sgn(q) < 0 ? Integer(-r) : r;
}

int mod8(const Integer& u)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return static_cast<int>(r.get_si());
}

int hilbert_integers(Integer a, Integer b, const Integer& p)
{
    if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
    int va = 0, vb = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        a /= p;
        ++va;
    }
    while (mpz_divisible_p(b.get_mpz_t(), p.get_mpz_t())) {
        b /= p;
        ++vb;
    }
    if (p == 2) {
        int u = mod8(a), v = mod8(b);
        int eu = ((u - 1) / 2) % 2, ev = ((v - 1) / 2) % 2;
        int wu = ((u * u - 1) / 8) % 2, wv = ((v * v - 1) / 8) % 2;
        int ex = eu * ev + va * wv + vb * wu;
        return ex % 2 ? -1 : 1;
    }
    int s = 1;
    Integer half = (p - 1) / 2;
    if (va % 2 && vb % 2 && mpz_odd_p(half.get_mpz_t())) s = -s;
    if (vb % 2) s *= mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
    if (va % 2) s *= mpz_legendre(b.get_mpz_t(), p.get_mpz_t());
    return s;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p)
{
    return hilbert_integers(square_class(a), square_class(b), p);
}

bool is_division_over_q(const Rational& a, const Rational& b)
{
    Integer sa = square_class(a), sb = square_class(b);
    std::map<Integer, int> primes;
    factor_into(abs(sa), primes);
    factor_into(abs(sb), primes);
    primes[Integer(2)] += 0;
    if (hilbert_integers(sa, sb, 0) == -1) return true;
    for (const auto& [p, e] : primes)
        if (hilbert_integers(sa, sb, p) == -1) return true;
    return false;
}

}  // namespace endoscope
