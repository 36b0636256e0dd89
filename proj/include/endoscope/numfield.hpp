#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "endoscope/matrix.hpp"
#include "endoscope/poly.hpp"
#include "endoscope/roots.hpp"

namespace endoscope {

class NumberField;
class NFElement;
using FieldPtr = std::shared_ptr<const NumberField>;

enum class FieldKind { TotallyReal, CM, Other };
const char* to_string(FieldKind kind) noexcept;

struct FieldTypeReport;

/* Q[x]/(minpoly) with minpoly monic and irreducible.  Embeddings are the
 * certified roots of minpoly, in the order returned by isolate_roots. */
class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    static FieldPtr create(const RationalPoly& minpoly);

    const RationalPoly& minpoly() const noexcept { return minpoly_; }
    int degree() const noexcept { return minpoly_.degree(); }

    const std::vector<ComplexEnclosure>& embeddings() const noexcept { return embeddings_; }
    /* embeddings at (at least) the given precision, same order as embeddings() */
    std::vector<ComplexEnclosure> embeddings(long precision_bits) const;

    bool is_totally_real() const noexcept { return totally_real_; }
    bool has_real_embedding() const noexcept { return real_count_ > 0; }
    FieldTypeReport field_type() const;

    bool same_as(const NumberField& other) const { return this == &other || minpoly_ == other.minpoly_; }

   private:
    struct Token {};

   public:
    NumberField(Token, RationalPoly minpoly);

   private:
    struct CachedType {
        FieldKind kind = FieldKind::Other;
        RationalPoly conj;
        RationalPoly real_minpoly;
        RationalPoly real_generator;
    };
    CachedType compute_type() const;

    RationalPoly minpoly_;
    std::vector<ComplexEnclosure> embeddings_;
    bool totally_real_ = false;
    int real_count_ = 0;
    mutable std::once_flag type_once_;
    mutable CachedType type_;
};

class NFElement {
   public:
    NFElement(FieldPtr field, const RationalPoly& coords);
    static NFElement from_rational(FieldPtr field, const Rational& q);
    static NFElement generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    const RationalPoly& coords() const noexcept { return coords_; }
    bool is_zero() const noexcept { return coords_.is_zero(); }
    bool is_rational() const noexcept { return coords_.degree() <= 0; }
    Rational rational_value() const;

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const Rational& c);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    NFElement inverse() const;
    NFElement pow(long exp) const;
    /* p(x) for a rational polynomial p */
    NFElement apply(const RationalPoly& p) const;

    /* value under the embedding sending the generator into root */
    ComplexBall embed(const ComplexEnclosure& root) const;

   private:
    FieldPtr field_;
    RationalPoly coords_;
};

struct FieldTypeReport {
    FieldKind kind = FieldKind::Other;
    std::optional<NFElement> conj_automorphism;        // image of the generator
    std::optional<RationalPoly> max_real_subfield_minpoly;
    std::optional<NFElement> max_real_generator;       // generates the fixed field
};

RationalMatrix multiplication_matrix(const NFElement& x);
/* characteristic polynomial of multiplication by x, degree e */
RationalPoly field_charpoly(const NFElement& x);
RationalPoly minimal_polynomial(const NFElement& x);
Rational norm(const NFElement& x);
Rational trace(const NFElement& x);

/* Relative norm and trace down to the subfield Q(s).  Results lie in Q(s)
 * but are returned as elements of the ambient field. */
struct RelativeNormTrace {
    NFElement norm;
    NFElement trace;
};
RelativeNormTrace norm_trace_to_subfield(const NFElement& x, const NFElement& s);

/* Square root inside a totally real field, found numerically and verified
 * exactly; nullopt when none is found (always exact for rational input). */
std::optional<NFElement> square_root(const NFElement& y);

/* Gaussian elimination in ball arithmetic; nullopt if a pivot can't be
 * separated from zero at the working precision. */
std::optional<std::vector<ComplexBall>> solve_ball_system(std::vector<std::vector<ComplexBall>> a,
                                                          std::vector<ComplexBall> rhs);

bool is_totally_real(const NumberField& f);
FieldTypeReport cm_structure(const NumberField& f);

}  // namespace endoscope
