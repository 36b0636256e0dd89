#pragma once

#include <json.hpp>
#include <string>

#include "endoscope/classify.hpp"

namespace endoscope {

using Json = nlohmann::ordered_json;

/* Parsing errors are validation errors whose detail starts with the JSON
 * pointer of the offending value. */
Rational rational_from_json(const Json& j, const std::string& pointer);
Json rational_to_json(const Rational& q);

/* "num/den" strings, constant term first; plain integers are accepted on input */
RationalPoly poly_from_json(const Json& j, const std::string& pointer);
Json poly_to_json(const RationalPoly& p);

Json enclosure_to_json(const ComplexEnclosure& z, int digits);
Json ball_to_decimal(const Ball& b, int digits);

/* {"field": {"minpoly": [...]}, "element": [...], "g": n} or
 * {"quaternion": {"base_minpoly", "alpha", "beta"}, "element": {"a","b","c","d"}, "g": n} */
EndomorphismSpec spec_from_json(const Json& j, const std::string& pointer);
Json spec_to_json(const EndomorphismSpec& spec);

Json albert_to_json(const AlbertType& t);
Json growth_to_json(const GrowthReport& r);
Json entropy_to_json(const EntropyReport& r, const std::optional<StructureCertificate>& cert, int digits);
Json salem_to_json(const SalemReport& r, int digits);
Json fixpoints_to_json(const EndomorphismSpec& spec, unsigned long nmax);

/* decimal digits matching a binary precision */
int decimal_digits(long precision_bits);

}  // namespace endoscope
