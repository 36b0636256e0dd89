#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endoscope/numfield.hpp"

namespace endoscope {

class QuatAlgebra;
using AlgebraPtr = std::shared_ptr<const QuatAlgebra>;

/* (alpha, beta / F): i^2 = alpha, j^2 = beta, ij = -ji, over a totally real F. */
class QuatAlgebra {
   public:
    static AlgebraPtr create(const NFElement& alpha, const NFElement& beta);

    const FieldPtr& base() const noexcept { return base_; }
    const NFElement& alpha() const noexcept { return alpha_; }
    const NFElement& beta() const noexcept { return beta_; }
    bool same_as(const QuatAlgebra& other) const
    {
        return this == &other || (base_->same_as(*other.base_) && alpha_ == other.alpha_ && beta_ == other.beta_);
    }

    QuatAlgebra(FieldPtr base, NFElement alpha, NFElement beta)
        : base_(std::move(base)), alpha_(std::move(alpha)), beta_(std::move(beta))
    {
    }

   private:
    FieldPtr base_;
    NFElement alpha_;
    NFElement beta_;
};

class QuatElement {
   public:
    QuatElement(AlgebraPtr algebra, NFElement a, NFElement b, NFElement c, NFElement d);
    static QuatElement scalar(AlgebraPtr algebra, const NFElement& a);
    static QuatElement scalar(AlgebraPtr algebra, const Rational& a);
    static QuatElement i(AlgebraPtr algebra);
    static QuatElement j(AlgebraPtr algebra);
    static QuatElement k(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const NFElement& a() const noexcept { return a_; }
    const NFElement& b() const noexcept { return b_; }
    const NFElement& c() const noexcept { return c_; }
    const NFElement& d() const noexcept { return d_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_scalar() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

    QuatElement operator-() const;
    friend QuatElement operator+(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator-(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator*(const QuatElement& x, const QuatElement& y);
    friend QuatElement operator*(const QuatElement& x, const NFElement& s);
    friend bool operator==(const QuatElement& x, const QuatElement& y);
    friend bool operator!=(const QuatElement& x, const QuatElement& y) { return !(x == y); }

    QuatElement pow(unsigned long exp) const;

   private:
    AlgebraPtr algebra_;
    NFElement a_, b_, c_, d_;
};

QuatElement conjugate(const QuatElement& x);
NFElement reduced_trace(const QuatElement& x);
NFElement reduced_norm(const QuatElement& x);

/* [Nrd, -Trd, 1]: the monic quadratic over F, constant term first. */
std::vector<NFElement> reduced_charpoly_over_f(const QuatElement& x);
/* N_{F/Q}(x^2 - Trd x + Nrd), degree 2e, from field norms at 2e+1 points. */
RationalPoly reduced_charpoly_over_q(const QuatElement& x);
/* The same polynomial as Res_y(minpoly_F(y), x^2 - T(y) x + N(y)). */
RationalPoly reduced_charpoly_over_q_resultant(const QuatElement& x);
/* Characteristic polynomial of left multiplication on the 4e-dimensional
 * Q-space; equals reduced_charpoly_over_q squared. */
RationalPoly regular_representation_charpoly(const QuatElement& x);

/* t = b^2 alpha + c^2 beta - d^2 alpha beta, so the reduced roots are a +- sqrt(t) */
NFElement discriminant_t(const QuatElement& x);
/* Q-minimal polynomial of sqrt(t), from Res_y(minpoly_F(y), x^2 - t(y)) */
RationalPoly sqrt_t_minpoly(const QuatElement& x);

enum class Definiteness { TotallyDefinite, TotallyIndefinite, Mixed };
const char* to_string(Definiteness kind) noexcept;

struct DefinitenessReport {
    Definiteness kind = Definiteness::Mixed;
    std::vector<std::pair<int, int>> per_embedding_signs;  // (sign alpha, sign beta)
};
DefinitenessReport definiteness(const QuatAlgebra& b);

/* Sign of an element of a totally real field under each embedding. */
std::vector<int> embedding_signs(const NFElement& x);

enum class SplitStatus { witness, division, split, inconclusive };
const char* to_string(SplitStatus s) noexcept;

struct SplitReport {
    SplitStatus status = SplitStatus::inconclusive;
    std::optional<QuatElement> witness;  // nonzero with Nrd = 0
    std::string method;
};

/* Bounded search for a zero divisor.  Coordinates of the searched elements
 * have the form (n_0 + n_1 theta + ...)/den with |n_i| <= bound, den <= bound. */
SplitReport split_witness_search(const AlgebraPtr& b, int height_bound);

/* Hilbert symbol (a, b)_p over Q; p = 0 denotes the real place. */
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);
/* (a, b / Q) is a division algebra iff some local Hilbert symbol is -1. */
bool is_division_over_q(const Rational& a, const Rational& b);

}  // namespace endoscope
