#include "endoscope/bigfloat.hpp"

#include <algorithm>

#include "endoscope/error.hpp"

namespace endoscope {

BigFloat::BigFloat(mpfr_prec_t prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const BigFloat& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, other.precision());
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    if (this != &other) mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    BigFloat r(prec);
    mpfr_set_q(r.value_, q.get_mpq_t(), rnd);
    return r;
}

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec)
{
    BigFloat r(prec);
    mpfr_set_d(r.value_, d, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_integer(const Integer& z, mpfr_prec_t prec, mpfr_rnd_t rnd)
{
    BigFloat r(prec);
    mpfr_set_z(r.value_, z.get_mpz_t(), rnd);
    return r;
}

Rational BigFloat::to_rational() const
{
    if (!mpfr_number_p(value_)) fail(ErrorKind::internal, "non-finite floating value");
    if (mpfr_zero_p(value_)) return 0;
    Integer m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), value_);
    Rational q(m);
    if (e >= 0)
        mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    q.canonicalize();
    return q;
}

std::string BigFloat::to_decimal(int digits) const
{
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), value_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {

/* rad += 2^(exp(mid) - prec(mid)), a bound for one rounding of mid */
void add_ulp(BigFloat& rad, const BigFloat& mid)
{
    if (mid.is_zero()) return;
    mpfr_t u;
    mpfr_init2(u, radius_precision);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid.get()) - mid.precision(), MPFR_RNDU);
    mpfr_add(rad.get(), rad.get(), u, MPFR_RNDU);
    mpfr_clear(u);
}

BigFloat abs_of(const BigFloat& x)
{
    BigFloat r(x.precision());
    mpfr_abs(r.get(), x.get(), MPFR_RNDN);
    return r;
}

mpfr_prec_t joint_precision(const Ball& a, const Ball& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(radius_precision) {}

Ball::Ball(BigFloat mid, BigFloat rad) : mid_(std::move(mid)), rad_(radius_precision)
{
    mpfr_set(rad_.get(), rad.get(), MPFR_RNDU);
}

Ball Ball::exact(const Rational& q, mpfr_prec_t prec)
{
    Ball b(prec);
    if (mpfr_set_q(b.mid_.get(), q.get_mpq_t(), MPFR_RNDN) != 0) add_ulp(b.rad_, b.mid_);
    return b;
}

Ball Ball::from_interval(const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec)
{
    Ball b(prec);
    mpfr_add(b.mid_.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
    BigFloat t(radius_precision);
    mpfr_sub(b.rad_.get(), hi.get(), b.mid_.get(), MPFR_RNDU);
    mpfr_sub(t.get(), b.mid_.get(), lo.get(), MPFR_RNDU);
    mpfr_max(b.rad_.get(), b.rad_.get(), t.get(), MPFR_RNDU);
    return b;
}

BigFloat Ball::lower() const
{
    BigFloat r(precision());
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
}

BigFloat Ball::upper() const
{
    BigFloat r(precision());
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
}

BigFloat Ball::mag() const
{
    BigFloat r(precision());
    BigFloat m = abs_of(mid_);
    mpfr_add(r.get(), m.get(), rad_.get(), MPFR_RNDU);
    return r;
}

BigFloat Ball::mig() const
{
    BigFloat r(precision());
    if (contains_zero()) return r;
    BigFloat m = abs_of(mid_);
    mpfr_sub(r.get(), m.get(), rad_.get(), MPFR_RNDD);
    return r;
}

bool Ball::contains_zero() const { return lower().sign() <= 0 && upper().sign() >= 0; }
bool Ball::is_positive() const { return lower().sign() > 0; }
bool Ball::is_negative() const { return upper().sign() < 0; }

bool Ball::contains(const Rational& q) const
{
    return mpfr_cmp_q(lower().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(upper().get(), q.get_mpq_t()) >= 0;
}

bool Ball::overlaps(const Ball& other) const
{
    return mpfr_lessequal_p(lower().get(), other.upper().get()) && mpfr_lessequal_p(other.lower().get(), upper().get());
}

bool Ball::certainly_less(const Ball& other) const { return mpfr_less_p(upper().get(), other.lower().get()) != 0; }

Ball Ball::operator-() const
{
    Ball r = *this;
    mpfr_neg(r.mid_.get(), r.mid_.get(), MPFR_RNDN);
    return r;
}

Ball operator+(const Ball& a, const Ball& b)
{
    Ball r(joint_precision(a, b));
    mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    if (mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN) != 0) add_ulp(r.rad_, r.mid_);
    return r;
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b)
{
    Ball r(joint_precision(a, b));
    BigFloat am = abs_of(a.mid_), bm = abs_of(b.mid_);
    BigFloat t(radius_precision);
    mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    if (mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN) != 0) add_ulp(r.rad_, r.mid_);
    return r;
}

Ball Ball::inverse() const
{
    BigFloat m = abs_of(mid_);
    if (!mpfr_greater_p(m.get(), rad_.get())) fail(ErrorKind::precision_exhausted, "inverse of a ball containing zero");
    Ball r(precision());
    if (!rad_.is_zero()) {
        BigFloat den(radius_precision);
        mpfr_sub(den.get(), m.get(), rad_.get(), MPFR_RNDD);
        mpfr_mul(den.get(), den.get(), m.get(), MPFR_RNDD);
        mpfr_div(r.rad_.get(), rad_.get(), den.get(), MPFR_RNDU);
    }
    if (mpfr_ui_div(r.mid_.get(), 1, mid_.get(), MPFR_RNDN) != 0) add_ulp(r.rad_, r.mid_);
    return r;
}

Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }

Ball Ball::sqrt() const
{
    BigFloat hi = upper();
    if (hi.sign() < 0) fail(ErrorKind::internal, "square root of a negative ball");
    BigFloat lo = lower();
    if (lo.sign() < 0) mpfr_set_zero(lo.get(), 1);
    mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_sqrt(hi.get(), hi.get(), MPFR_RNDU);
    return from_interval(lo, hi, precision());
}

Ball Ball::log() const
{
    BigFloat lo = lower();
    if (lo.sign() <= 0) fail(ErrorKind::precision_exhausted, "logarithm of a ball touching zero");
    BigFloat hi = upper();
    mpfr_log(lo.get(), lo.get(), MPFR_RNDD);
    mpfr_log(hi.get(), hi.get(), MPFR_RNDU);
    return from_interval(lo, hi, precision());
}

Ball Ball::abs() const
{
    if (is_negative()) return -*this;
    if (!contains_zero()) return *this;
    return from_interval(BigFloat(precision()), mag(), precision());
}

Ball Ball::widened(const BigFloat& extra) const
{
    Ball r = *this;
    mpfr_add(r.rad_.get(), r.rad_.get(), extra.get(), MPFR_RNDU);
    return r;
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b)
{
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b)
{
    Ball inv = b.abs2().inverse();
    ComplexBall num = a * b.conj();
    return {num.re_ * inv, num.im_ * inv};
}

ComplexBall ComplexBall::pow(unsigned long n) const
{
    ComplexBall result = exact(1, precision());
    ComplexBall base = *this;
    while (n) {
        if (n & 1UL) result = result * base;
        n >>= 1UL;
        if (n) base = base * base;
    }
    return result;
}

ComplexBall evaluate(const std::vector<Rational>& coeffs, const ComplexBall& z)
{
    mpfr_prec_t prec = z.precision();
    if (coeffs.empty()) return ComplexBall(prec);
    ComplexBall acc = ComplexBall::exact(coeffs.back(), prec);
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + ComplexBall::exact(coeffs[i], prec);
    return acc;
}

}  // namespace endoscope
