#include <doctest.h>

#include <cmath>

#include "endoscope/cli.hpp"
#include "endoscope/error.hpp"
#include "support.hpp"

using namespace endoscope;
using namespace testsupport;

namespace {

EndomorphismSpec field_spec(std::initializer_list<Rational> minpoly, std::initializer_list<Rational> coords, int g)
{
    FieldPtr f = NumberField::create(RationalPoly(minpoly));
    return {NFElement(f, RationalPoly(coords)), g};
}

AlgebraPtr hamilton()
{
    FieldPtr q = NumberField::create(RationalPoly{0, 1});
    return QuatAlgebra::create(NFElement::from_rational(q, -1), NFElement::from_rational(q, -1));
}

ErrorKind error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal;
}

}  // namespace

TEST_SUITE("classify")
{
    TEST_CASE("admissibility")
    {
        CHECK(admissibility_check(field_spec({-2, 0, 1}, {1, 1}, 2)).kind == AlbertKind::TotallyRealField);
        CHECK(admissibility_check(field_spec({1, 0, 1}, {0, 1}, 1)).kind == AlbertKind::CMField);
        CHECK(error_of([] { admissibility_check(field_spec({-2, 0, 1}, {1, 1}, 3)); }) == ErrorKind::divisibility_violation);
        CHECK(error_of([] { admissibility_check(field_spec({1, -1, -1, -1, 1}, {0, 1}, 4)); }) ==
              ErrorKind::not_simple_albert_type);
        CHECK(error_of([] { admissibility_check(field_spec({-2, 0, 1}, {Rational(1, 2)}, 2)); }) ==
              ErrorKind::non_integral_element);
        CHECK(error_of([] { admissibility_check(field_spec({-2, 0, 1}, {}, 2)); }) == ErrorKind::validation);
        QuatElement i = QuatElement::i(hamilton());
        CHECK(admissibility_check({i, 2}).kind == AlbertKind::TotallyDefiniteQuaternion);
        CHECK(error_of([&] { admissibility_check({i, 1}); }) == ErrorKind::divisibility_violation);
        FieldPtr f = NumberField::create(RationalPoly{-2, 0, 1});
        AlgebraPtr mixed = QuatAlgebra::create(NFElement::generator(f), NFElement::from_rational(f, -1));
        CHECK(error_of([&] { admissibility_check({QuatElement::i(mixed), 4}); }) == ErrorKind::not_simple_albert_type);
    }

    TEST_CASE("root of unity test")
    {
        CHECK(is_root_of_unity(RationalPoly{1, 1, 1, 1, 1}) == 5UL);
        CHECK(is_root_of_unity(RationalPoly{1, 0, 1}) == 4UL);
        CHECK_FALSE(is_root_of_unity(RationalPoly{1, -1, -1, -1, 1}));
        CHECK_FALSE(is_root_of_unity(RationalPoly{-1, -1, 1}));
        CHECK(error_of([] { is_root_of_unity(RationalPoly{1, Rational(1, 2), 1}); }) == ErrorKind::non_integral_element);
    }

    TEST_CASE("growth classes")
    {
        GrowthReport i = classify_growth(field_spec({1, 0, 1}, {0, 1}, 1));
        CHECK(i.growth == GrowthClass::Periodic);
        CHECK(i.period == 4UL);
        CHECK(i.unit_circle_roots_of_unity);
        GrowthReport z = classify_growth(field_spec({1, 1, 1, 1, 1}, {0, 1}, 2));
        CHECK(z.growth == GrowthClass::Periodic);
        CHECK(z.period == 5UL);
        GrowthReport m1 = classify_growth(field_spec({0, 1}, {-1}, 3));
        CHECK(m1.period == 2UL);
        CHECK(classify_growth(field_spec({0, 1}, {1}, 1)).period == 1UL);
        CHECK(classify_growth(field_spec({-2, 0, 1}, {1, 1}, 2)).growth == GrowthClass::ExponentialPure);
        CHECK(classify_growth(field_spec({1, 0, 1}, {1, 1}, 1)).growth == GrowthClass::ExponentialPure);
        CHECK(classify_growth(paper_example_spec(paper_examples()[0])).growth == GrowthClass::ExponentialMixed);
        // (1 + i + j + k)/2 in the Hurwitz order has order 6
        AlgebraPtr h = hamilton();
        QuatElement w = (QuatElement::scalar(h, 1) + QuatElement::i(h) + QuatElement::j(h) + QuatElement::k(h)) *
                        NFElement::from_rational(h->base(), Rational(1, 2));
        GrowthReport q = classify_growth({w, 2});
        CHECK(q.growth == GrowthClass::Periodic);
        CHECK(q.period == 6UL);
    }

    TEST_CASE("minimal period divides the order lcm")
    {
        // -zeta_5 has order 10; the fixed-point sequence inherits period 10
        GrowthReport r = classify_growth(field_spec({1, 1, 1, 1, 1}, {0, -1}, 2));
        REQUIRE(r.period);
        CHECK(*r.period == 10UL);
        EndomorphismSpec s = field_spec({1, 1, 1, 1, 1}, {0, -1}, 2);
        for (unsigned long n = 1; n <= 30; ++n) CHECK(fixed_points_exact(s, n) == fixed_points_exact(s, n + 10));
    }

    TEST_CASE("automorphisms")
    {
        CHECK(is_automorphism(field_spec({-2, 0, 1}, {1, 1}, 2)));
        CHECK_FALSE(is_automorphism(field_spec({1, 0, 1}, {1, 1}, 1)));
        for (const auto& ex : paper_examples()) CHECK(is_automorphism(paper_example_spec(ex)));
    }

    TEST_CASE("Salem polynomials")
    {
        for (RationalPoly p : {RationalPoly{1, -1, -1, -1, 1}, RationalPoly{1, -3, 0, -3, 1}, RationalPoly{1, -7, -1, -7, 1},
                               RationalPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}}) {
            SalemReport r = is_salem_polynomial(p);
            CHECK_MESSAGE(r.is_salem, p.to_string());
            CHECK(r.unit_circle_deviation < 1e-10);
            CHECK(r.reciprocal_pair);
            REQUIRE(r.lambda);
            // lambda is a root: p changes sign across its enclosure
            Ball l = r.lambda->ball().re();
            CHECK(p.eval(l.lower().to_rational()) * p.eval(l.upper().to_rational()) < 0);
        }
        CHECK_FALSE(is_salem_polynomial(RationalPoly{-1, -1, 1}).is_salem);           // quadratic Pisot
        CHECK_FALSE(is_salem_polynomial(RationalPoly{1, 1, 1, 1, 1}).is_salem);        // cyclotomic
        CHECK_FALSE(is_salem_polynomial(RationalPoly{1, -3, 1}.pow(2)).is_salem);      // reducible
        CHECK_FALSE(is_salem_polynomial(RationalPoly{1, -8, 15, -8, 1}).is_salem);    // real roots only
        CHECK(error_of([] { is_salem_polynomial(RationalPoly{1, 0, 0, 0, 2}); }) == ErrorKind::non_integral_element);
    }

    TEST_CASE("entropy values")
    {
        EntropyReport i = entropy(field_spec({1, 0, 1}, {0, 1}, 1));
        CHECK_FALSE(i.positive);
        CHECK(i.value.mid().is_zero());
        CHECK(i.value.rad().is_zero());

        EntropyReport s = entropy(field_spec({-2, 0, 1}, {1, 1}, 2));
        CHECK(s.gamma_minpoly == RationalPoly{1, -6, 1});
        CHECK(std::fabs(s.value.to_double() - 2 * std::log(1 + std::sqrt(2.0))) < 1e-12);
        CHECK_FALSE(s.is_salem);

        EntropyReport q = entropy(paper_example_spec(paper_examples()[0]));
        CHECK(q.gamma_minpoly == RationalPoly{1, -3, 1, -3, 1});
        CHECK(q.is_salem);

        // 1 + i on Q(i): gamma = |1+i|^2 = 2
        EntropyReport c = entropy(field_spec({1, 0, 1}, {1, 1}, 1));
        CHECK(c.gamma_minpoly == RationalPoly{-2, 1});
        // 1 + i in Hamilton quaternions, g = 2: eigenvalues 1 +- i twice each, gamma = 4
        AlgebraPtr h = hamilton();
        EntropyReport d = entropy({QuatElement::scalar(h, 1) + QuatElement::i(h), 2});
        CHECK(d.gamma_minpoly == RationalPoly{-4, 1});
    }

    TEST_CASE("negative eigenvalue products")
    {
        // the conjugate of -1 - sqrt2 outside the unit circle is negative; gamma is its absolute value
        EntropyReport r = entropy(field_spec({-2, 0, 1}, {-1, -1}, 2));
        CHECK(r.gamma_minpoly == RationalPoly{1, -6, 1});
        EntropyReport t = entropy(field_spec({-2, 0, 1}, {-1, -1}, 4));
        CHECK(t.gamma_minpoly == RationalPoly{1, -34, 1});
    }

    TEST_CASE("structure certificates")
    {
        auto cert = [](const EndomorphismSpec& s) { return structure_certificate(entropy(s), s); };
        CHECK(cert(field_spec({-2, 0, 1}, {1, 1}, 2)).ok);
        CHECK(cert(field_spec({1, 0, 1}, {0, 1}, 1)).ok);
        CHECK(cert(field_spec({1, 0, 1}, {1, 1}, 1)).ok);
        AlgebraPtr h = hamilton();
        CHECK(cert({QuatElement::scalar(h, 1) + QuatElement::i(h), 2}).ok);
        EndomorphismSpec p = paper_example_spec(paper_examples()[0]);
        CHECK(error_of([&] { structure_certificate(entropy(p), p); }) == ErrorKind::wrong_albert_type);
        // a wrong gamma is rejected
        EndomorphismSpec s = field_spec({-2, 0, 1}, {1, 1}, 2);
        EntropyReport bad = entropy(s);
        bad.gamma_minpoly = RationalPoly{-1, -2, 1};
        CHECK_FALSE(structure_certificate(bad, s).ok);
    }
}
