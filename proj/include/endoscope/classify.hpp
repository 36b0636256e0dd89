#pragma once

#include <optional>
#include <string>

#include "endoscope/lefschetz.hpp"

namespace endoscope {

enum class AlbertKind { TotallyRealField, CMField, TotallyDefiniteQuaternion, TotallyIndefiniteQuaternion };
const char* to_string(AlbertKind kind) noexcept;

struct AlbertType {
    AlbertKind kind;
    int d;
    int e;
};

/* Albert type of End_Q(X) plus the divisibility and integrality conditions
 * an endomorphism of a simple g-dimensional variety must meet. */
AlbertType admissibility_check(const EndomorphismSpec& spec);

/* Exact order k with q | x^k - 1, or nullopt.  Returns early when an
 * enclosure already lies off the unit circle. */
std::optional<unsigned long> is_root_of_unity(const RationalPoly& q);

enum class GrowthClass { Periodic, ExponentialPure, ExponentialMixed, UnitCircleNonTorsionOnly };
const char* to_string(GrowthClass c) noexcept;

struct GrowthReport {
    AlbertType albert;
    GrowthClass growth;
    std::optional<unsigned long> period;
    bool unit_circle_roots_of_unity = false;
    std::string witness;
};

GrowthReport classify_growth(const EndomorphismSpec& spec, long precision_bits = default_precision);

/* N_{D/Q}(f) = +-1 with an integral characteristic polynomial. */
bool is_automorphism(const EndomorphismSpec& spec);

struct SalemReport {
    bool is_salem = false;
    std::string reason;
    std::optional<ComplexEnclosure> lambda;       // the real root > 1
    std::optional<ComplexEnclosure> lambda_inv;   // the real root in (0, 1)
    double unit_circle_deviation = 0;             // bound on ||mu| - 1| from the enclosures
    bool reciprocal_pair = false;                 // lambda * (1/lambda) = 1 by reciprocity
};

/* Fails with non_integral_element unless p is monic with integer coefficients. */
SalemReport is_salem_polynomial(const RationalPoly& p, long precision_bits = default_precision);

struct EntropyReport {
    Ball value;                  // log(gamma)
    Ball gamma;
    RationalPoly gamma_minpoly;
    bool is_salem = false;
    bool positive = false;
};

EntropyReport entropy(const EndomorphismSpec& spec, long precision_bits = default_precision);

struct StructureCertificate {
    bool ok = false;
    std::string description;
};

/* Checks that gamma_minpoly divides the polynomial of s-fold products of
 * conjugates of an element of the maximal totally real subfield and that
 * all its roots are real. */
StructureCertificate structure_certificate(const EntropyReport& report, const EndomorphismSpec& spec);

}  // namespace endoscope
