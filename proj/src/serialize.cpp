#include "endoscope/serialize.hpp"

#include <cmath>
#include <cstdio>

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

[[noreturn]] void bad(const std::string& pointer, const std::string& what)
{
    fail(ErrorKind::validation, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& pointer)
{
    if (!j.is_object()) bad(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad(pointer + "/" + key, "missing field");
    return *it;
}

NFElement element_from_json(const FieldPtr& field, const Json& j, const std::string& pointer)
{
    RationalPoly coords = poly_from_json(j, pointer);
    if (coords.degree() >= field->degree()) coords = coords % field->minpoly();
    return NFElement(field, coords);
}

FieldPtr field_from_json(const Json& j, const std::string& pointer)
{
    RationalPoly p = poly_from_json(j, pointer);
    try {
        return NumberField::create(p);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::validation || e.kind() == ErrorKind::degree_cap) bad(pointer, e.what());
        throw;
    }
}

}  // namespace

int decimal_digits(long precision_bits)
{
    return std::max(6, static_cast<int>(static_cast<double>(precision_bits) * 0.30103) - 4);
}

Rational rational_from_json(const Json& j, const std::string& pointer)
{
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (!j.is_string()) bad(pointer, "expected a rational as \"num/den\" string or integer");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        bad(pointer, e.what());
    }
}

Json rational_to_json(const Rational& q)
{
    return to_fraction_string(q);
}

RationalPoly poly_from_json(const Json& j, const std::string& pointer)
{
    if (!j.is_array()) bad(pointer, "expected an array of coefficients, constant term first");
    std::vector<Rational> c;
    for (std::size_t i = 0; i < j.size(); ++i) c.push_back(rational_from_json(j[i], pointer + "/" + std::to_string(i)));
    return RationalPoly(std::move(c));
}

Json poly_to_json(const RationalPoly& p)
{
    Json a = Json::array();
    for (int i = 0; i <= p.degree(); ++i) a.push_back(rational_to_json(p.coeff(i)));
    return a;
}

Json enclosure_to_json(const ComplexEnclosure& z, int digits)
{
    return Json{{"re", z.re_mid.to_decimal(digits)}, {"im", z.im_mid.to_decimal(digits)}, {"radius", z.radius.to_decimal(3)}};
}

Json ball_to_decimal(const Ball& b, int digits)
{
    return Json{{"mid", b.mid().to_decimal(digits)}, {"radius", b.rad().to_decimal(3)}};
}

EndomorphismSpec spec_from_json(const Json& j, const std::string& pointer)
{
    if (!j.is_object()) bad(pointer, "expected an object");
    const Json& gj = member(j, "g", pointer);
    if (!gj.is_number_integer() || gj.get<long long>() < 1 || gj.get<long long>() > 1000)
        bad(pointer + "/g", "expected a positive integer dimension");
    int g = gj.get<int>();
    bool has_field = j.contains("field"), has_quat = j.contains("quaternion");
    if (has_field == has_quat) bad(pointer, "exactly one of \"field\" and \"quaternion\" is required");
    const Json& el = member(j, "element", pointer);
    if (has_field) {
        FieldPtr f = field_from_json(member(j["field"], "minpoly", pointer + "/field"), pointer + "/field/minpoly");
        return {element_from_json(f, el, pointer + "/element"), g};
    }
    const std::string qp = pointer + "/quaternion";
    const Json& q = j["quaternion"];
    FieldPtr base = field_from_json(member(q, "base_minpoly", qp), qp + "/base_minpoly");
    NFElement alpha = element_from_json(base, member(q, "alpha", qp), qp + "/alpha");
    NFElement beta = element_from_json(base, member(q, "beta", qp), qp + "/beta");
    AlgebraPtr alg;
    try {
        alg = QuatAlgebra::create(alpha, beta);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::validation) bad(qp, e.what());
        throw;
    }
    const std::string ep = pointer + "/element";
    auto part = [&](const char* key) { return element_from_json(base, member(el, key, ep), ep + "/" + key); };
    return {QuatElement(alg, part("a"), part("b"), part("c"), part("d")), g};
}

Json spec_to_json(const EndomorphismSpec& spec)
{
    Json j;
    if (spec.is_quaternion()) {
        const QuatElement& f = spec.quat_element();
        const QuatAlgebra& alg = *f.algebra();
        j["quaternion"] = {{"base_minpoly", poly_to_json(alg.base()->minpoly())},
                           {"alpha", poly_to_json(alg.alpha().coords())},
                           {"beta", poly_to_json(alg.beta().coords())}};
        j["element"] = {{"a", poly_to_json(f.a().coords())},
                        {"b", poly_to_json(f.b().coords())},
                        {"c", poly_to_json(f.c().coords())},
                        {"d", poly_to_json(f.d().coords())}};
    } else {
        j["field"] = {{"minpoly", poly_to_json(spec.field_element().field()->minpoly())}};
        j["element"] = poly_to_json(spec.field_element().coords());
    }
    j["g"] = spec.g;
    return j;
}

Json albert_to_json(const AlbertType& t)
{
    return Json{{"kind", to_string(t.kind)}, {"d", t.d}, {"e", t.e}};
}

Json growth_to_json(const GrowthReport& r)
{
    Json j{{"class", to_string(r.growth)}};
    j["period"] = r.period ? Json(*r.period) : Json(nullptr);
    j["unit_circle_roots_of_unity"] = r.unit_circle_roots_of_unity;
    j["witness"] = r.witness;
    return j;
}

Json entropy_to_json(const EntropyReport& r, const std::optional<StructureCertificate>& cert, int digits)
{
    Json j{{"value_decimal", r.value.mid().to_decimal(digits)},
           {"value_radius", r.value.rad().to_decimal(3)},
           {"positive", r.positive},
           {"gamma_decimal", r.gamma.mid().to_decimal(digits)},
           {"gamma_minpoly", poly_to_json(r.gamma_minpoly)},
           {"is_salem", r.is_salem}};
    j["structure_ok"] = cert ? Json(cert->ok) : Json(nullptr);
    if (cert) j["structure"] = cert->description;
    return j;
}

Json salem_to_json(const SalemReport& r, int digits)
{
    Json j{{"is_salem", r.is_salem}, {"reason", r.reason}};
    if (r.lambda) j["lambda"] = enclosure_to_json(*r.lambda, digits);
    if (r.lambda_inv) j["lambda_inv"] = enclosure_to_json(*r.lambda_inv, digits);
    if (r.is_salem) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", r.unit_circle_deviation);
        j["unit_circle_deviation"] = buf;
        j["reciprocal_pair"] = r.reciprocal_pair;
    }
    return j;
}

Json fixpoints_to_json(const EndomorphismSpec& spec, unsigned long nmax)
{
    Json a = Json::array();
    for (unsigned long n = 1; n <= nmax; ++n) a.push_back({{"n", n}, {"fix", fixed_points_exact(spec, n).get_str()}});
    return a;
}

}  // namespace endoscope
