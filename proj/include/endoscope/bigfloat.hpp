#pragma once

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "endoscope/rational.hpp"

namespace endoscope {

/* Owning wrapper around an mpfr_t.  Copies keep the source precision. */
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t prec = 128);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);
    static BigFloat from_double(double d, mpfr_prec_t prec);
    static BigFloat from_integer(const Integer& z, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
    /* exact conversion; the value must be finite */
    Rational to_rational() const;
    /* scientific notation with the given number of significant digits */
    std::string to_decimal(int digits) const;

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

   private:
    mpfr_t value_;
};

inline constexpr mpfr_prec_t radius_precision = 64;

/* Real ball [mid - rad, mid + rad].  The midpoint carries the working
 * precision; the radius is kept at 64 bits and always rounded upward. */
class Ball {
   public:
    explicit Ball(mpfr_prec_t prec = 128);
    Ball(BigFloat mid, BigFloat rad);

    static Ball exact(const Rational& q, mpfr_prec_t prec);
    static Ball from_interval(const BigFloat& lo, const BigFloat& hi, mpfr_prec_t prec);

    const BigFloat& mid() const noexcept { return mid_; }
    const BigFloat& rad() const noexcept { return rad_; }
    mpfr_prec_t precision() const noexcept { return mid_.precision(); }

    BigFloat lower() const;
    BigFloat upper() const;
    /* sup of |x| over the ball */
    BigFloat mag() const;
    /* inf of |x| over the ball (0 when the ball contains zero) */
    BigFloat mig() const;

    bool contains_zero() const;
    bool is_positive() const;
    bool is_negative() const;
    bool contains(const Rational& q) const;
    bool overlaps(const Ball& other) const;
    /* every point of the ball is strictly below / above other's points */
    bool certainly_less(const Ball& other) const;

    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    /* fails with precision_exhausted when b contains zero */
    friend Ball operator/(const Ball& a, const Ball& b);

    Ball inverse() const;
    Ball sqr() const { return *this * *this; }
    /* requires the ball to be nonnegative (lower endpoint clipped at 0) */
    Ball sqrt() const;
    /* requires a positive ball */
    Ball log() const;
    Ball abs() const;

    /* radius grown by an upward-rounded amount */
    Ball widened(const BigFloat& extra) const;

    double to_double() const { return mid_.to_double(); }

   private:
    BigFloat mid_;
    BigFloat rad_;
};

/* Rectangular complex ball (independent real and imaginary balls). */
class ComplexBall {
   public:
    explicit ComplexBall(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
    ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexBall exact(const Rational& q, mpfr_prec_t prec) { return {Ball::exact(q, prec), Ball::exact(0, prec)}; }

    const Ball& re() const noexcept { return re_; }
    const Ball& im() const noexcept { return im_; }
    mpfr_prec_t precision() const noexcept { return re_.precision(); }

    ComplexBall conj() const { return {re_, -im_}; }
    Ball abs2() const { return re_.sqr() + im_.sqr(); }
    Ball abs() const { return abs2().sqrt(); }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    bool overlaps(const ComplexBall& o) const { return re_.overlaps(o.re_) && im_.overlaps(o.im_); }

    ComplexBall operator-() const { return {-re_, -im_}; }
    friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
    friend ComplexBall operator*(const ComplexBall& a, const Ball& b) { return {a.re_ * b, a.im_ * b}; }
    friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);

    ComplexBall pow(unsigned long n) const;

   private:
    Ball re_;
    Ball im_;
};

/* Horner evaluation with exactly-rounded coefficient balls. */
ComplexBall evaluate(const std::vector<Rational>& coeffs, const ComplexBall& z);

}  // namespace endoscope
