#include "endoscope/poly.hpp"

#include <algorithm>
#include <sstream>

#include "endoscope/error.hpp"

namespace endoscope {

// gmpxx reduces arithmetic results but not values built from a (num, den) pair
RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_) {
        if (c.get_den() == 0) fail(ErrorKind::division_by_zero, "coefficient with zero denominator");
        c.canonicalize();
    }
    normalize();
}

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : RationalPoly(std::vector<Rational>(coeffs)) {}

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_integers(const std::vector<Integer>& coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs) v.emplace_back(c);
    return RationalPoly(std::move(v));
}

void RationalPoly::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPoly::leading() const
{
    if (is_zero()) fail(ErrorKind::validation, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational RationalPoly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RationalPoly RationalPoly::derivative() const
{
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::monic() const
{
    if (is_zero()) return {};
    RationalPoly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_) c *= inv;
    return r;
}

RationalPoly RationalPoly::reciprocal() const
{
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::compose(const RationalPoly& q) const
{
    RationalPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
}

RationalPoly RationalPoly::scale_variable(const Rational& c) const
{
    RationalPoly r = *this;
    Rational f = 1;
    for (auto& coeff : r.coeffs_) {
        coeff *= f;
        f *= c;
    }
    r.normalize();
    return r;
}

RationalPoly RationalPoly::pow(unsigned exp) const
{
    RationalPoly result = constant(1);
    RationalPoly base = *this;
    while (exp) {
        if (exp & 1U) result *= base;
        exp >>= 1U;
        if (exp) base *= base;
    }
    return result;
}

bool RationalPoly::has_integer_coefficients() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

Integer RationalPoly::denominator_lcm() const
{
    Integer l = 1;
    for (const auto& c : coeffs_) l = lcm(l, c.get_den());
    return l;
}

std::vector<Integer> RationalPoly::primitive_integer_coeffs() const
{
    if (is_zero()) return {};
    Integer den = denominator_lcm();
    std::vector<Integer> v;
    v.reserve(coeffs_.size());
    Integer content = 0;
    for (const auto& c : coeffs_) {
        Integer n = c.get_num() * (den / c.get_den());
        content = gcd(content, n);
        v.push_back(n);
    }
    if (v.back() < 0) content = -content;
    for (auto& n : v) n /= content;
    return v;
}

std::string RationalPoly::to_string(char var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || i == 0) os << to_display_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RationalPoly RationalPoly::operator-() const
{
    RationalPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPoly(std::move(v));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs)
{
    *this = *this * rhs;
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

bool operator<(const RationalPoly& a, const RationalPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        auto k = static_cast<std::size_t>(i);
        if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
    }
    return false;
}

PolyDivMod divmod(const RationalPoly& p, const RationalPoly& q)
{
    if (q.is_zero()) fail(ErrorKind::division_by_zero, "polynomial division by zero");
    if (p.degree() < q.degree()) return {RationalPoly{}, p};
    std::vector<Rational> rem = p.coeffs();
    std::vector<Rational> quot(static_cast<std::size_t>(p.degree() - q.degree() + 1));
    const auto& qc = q.coeffs();
    Rational inv = 1 / q.leading();
    auto dq = static_cast<std::size_t>(q.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational c = rem[k + dq] * inv;
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= c * qc[j];
    }
    rem.resize(dq);
    return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

RationalPoly operator/(const RationalPoly& p, const RationalPoly& q) { return divmod(p, q).quotient; }
RationalPoly operator%(const RationalPoly& p, const RationalPoly& q) { return divmod(p, q).remainder; }

bool divides(const RationalPoly& d, const RationalPoly& p) { return (p % d).is_zero(); }

RationalPoly gcd(const RationalPoly& p, const RationalPoly& q)
{
    RationalPoly a = p, b = q;
    while (!b.is_zero()) {
        RationalPoly r = a % b;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

ExtendedGcd extended_gcd(const RationalPoly& p, const RationalPoly& q)
{
    RationalPoly r0 = p, r1 = q;
    RationalPoly s0 = RationalPoly::constant(1), s1;
    RationalPoly t0, t1 = RationalPoly::constant(1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        RationalPoly s2 = s0 - quot * s1;
        RationalPoly t2 = t0 - quot * t1;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {RationalPoly{}, RationalPoly{}, RationalPoly{}};
    Rational inv = 1 / r0.leading();
    return {r0 * inv, s0 * inv, t0 * inv};
}

RationalPoly squarefree_part(const RationalPoly& p)
{
    if (p.is_zero()) return {};
    if (p.degree() == 0) return RationalPoly::constant(1);
    return (p / gcd(p, p.derivative())).monic();
}

bool is_squarefree(const RationalPoly& p)
{
    if (p.is_zero()) return false;
    return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::pair<RationalPoly, int>> squarefree_decomposition(const RationalPoly& p)
{
    std::vector<std::pair<RationalPoly, int>> out;
    if (p.degree() <= 0) return out;
    RationalPoly f = p.monic();
    RationalPoly fp = f.derivative();
    RationalPoly a = gcd(f, fp);
    RationalPoly b = f / a;
    RationalPoly c = fp / a;
    RationalPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        RationalPoly ai = gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = b / ai;
        c = d / ai;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

Rational resultant(const RationalPoly& p, const RationalPoly& q)
{
    if (p.is_zero() || q.is_zero()) return 0;
    RationalPoly a = p, b = q;
    Rational acc = 1;
    while (true) {
        int da = a.degree(), db = b.degree();
        if (db == 0) return acc * endoscope::pow(b.leading(), da);
        if (da == 0) return acc * endoscope::pow(a.leading(), db);
        RationalPoly r = a % b;
        if (r.is_zero()) return 0;
        // res(a, b) = (-1)^(da*db) lc(b)^(da - dr) res(b, r)
        if ((da % 2 == 1) && (db % 2 == 1)) acc = -acc;
        acc *= endoscope::pow(b.leading(), da - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys)
{
    if (xs.size() != ys.size()) fail(ErrorKind::validation, "interpolate: size mismatch");
    std::size_t n = xs.size();
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational den = xs[i] - xs[i - level];
            if (den == 0) fail(ErrorKind::validation, "interpolate: repeated abscissa");
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == level) break;
        }
    }
    RationalPoly result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * RationalPoly{-xs[k], 1} + RationalPoly::constant(dd[k]);
    }
    return result;
}

bool is_reciprocal(const RationalPoly& p, int* sign)
{
    if (p.is_zero()) return false;
    // a root at 0 breaks the symmetry anyway, since the reversed polynomial drops degree
    RationalPoly r = p.reciprocal();
    if (r.degree() != p.degree()) return false;
    if (r == p) {
        if (sign) *sign = 1;
        return true;
    }
    if (r == -p) {
        if (sign) *sign = -1;
        return true;
    }
    return false;
}

}  // namespace endoscope
