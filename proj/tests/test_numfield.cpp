#include <doctest.h>

#include <cmath>

#include "endoscope/error.hpp"
#include "support.hpp"

using namespace endoscope;
using namespace testsupport;

namespace {

FieldPtr field(std::initializer_list<Rational> c) { return NumberField::create(RationalPoly(c)); }

/* product of the conjugates of x, evaluated in doubles from Eigen roots */
std::complex<double> numeric_norm(const NFElement& x)
{
    std::complex<double> prod = 1;
    for (auto r : numeric_roots(x.field()->minpoly())) {
        std::complex<double> v = 0;
        const auto& c = x.coords().coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + it->get_d();
        prod *= v;
    }
    return prod;
}

}  // namespace

TEST_SUITE("numfield")
{
    TEST_CASE("field creation validates the polynomial")
    {
        CHECK_THROWS_AS(field({-4, 0, 1}), Error);
        CHECK_THROWS_AS(field({5}), Error);
        FieldPtr f = field({-26, 0, 2});  // rescaled to x^2 - 13
        CHECK(f->minpoly() == RationalPoly{-13, 0, 1});
        CHECK(f->embeddings().size() == 2);
    }

    TEST_CASE("arithmetic in Q(sqrt13)")
    {
        FieldPtr f = field({-13, 0, 1});
        NFElement t = NFElement::generator(f);
        CHECK(t * t == NFElement::from_rational(f, 13));
        NFElement u = t + NFElement::from_rational(f, 1);
        CHECK(u * u.inverse() == NFElement::from_rational(f, 1));
        CHECK(u / u == NFElement::from_rational(f, 1));
        CHECK_THROWS_AS(NFElement::from_rational(f, 0).inverse(), Error);
        FieldPtr other = field({-2, 0, 1});
        CHECK_THROWS_AS(t + NFElement::generator(other), Error);
        CHECK(norm(u) == -12);
        CHECK(trace(u) == 2);
        CHECK(field_charpoly(u) == RationalPoly{-12, -2, 1});
        CHECK(u.pow(-2) * u.pow(2) == NFElement::from_rational(f, 1));
    }

    TEST_CASE("minimal polynomial of an element of a subfield")
    {
        FieldPtr f = field({1, 0, 0, 0, 1});  // x^4 + 1, contains sqrt2 = x + x^-1 = x - x^3
        NFElement s(f, RationalPoly{0, 1, 0, -1});
        CHECK(s * s == NFElement::from_rational(f, 2));
        CHECK(field_charpoly(s) == RationalPoly{-2, 0, 1}.pow(2));
        CHECK(minimal_polynomial(s) == RationalPoly{-2, 0, 1});
    }

    TEST_CASE("norm and trace agree with numeric conjugates")
    {
        Rng rng(3);
        for (int t = 0; t < 30; ++t) {
            const auto& corpus = (t % 2) ? cm_corpus() : totally_real_corpus();
            FieldPtr f = NumberField::create(corpus[static_cast<std::size_t>(t / 2) % corpus.size()]);
            NFElement x = random_element(f, rng, 5, 3);
            std::complex<double> n = numeric_norm(x);
            CHECK(norm(x).get_d() == doctest::Approx(n.real()).epsilon(1e-8));
            CHECK(std::fabs(n.imag()) < 1e-6 * (1 + std::abs(n)));
        }
    }

    TEST_CASE("field types of the test corpora")
    {
        for (const auto& p : totally_real_corpus()) {
            FieldPtr f = NumberField::create(p);
            CHECK_MESSAGE(f->field_type().kind == FieldKind::TotallyReal, p.to_string());
            CHECK(is_totally_real(*f));
        }
        for (const auto& p : cm_corpus()) {
            FieldPtr f = NumberField::create(p);
            FieldTypeReport r = f->field_type();
            REQUIRE_MESSAGE(r.kind == FieldKind::CM, p.to_string());
            // the conjugation is an involution fixing exactly the real subfield
            NFElement c = *r.conj_automorphism;
            NFElement cc(f, c.coords().compose(c.coords()));
            CHECK(cc == NFElement::generator(f));
            CHECK(c != NFElement::generator(f));
            CHECK(r.max_real_subfield_minpoly->degree() * 2 == f->degree());
            NFElement g = *r.max_real_generator;
            CHECK(NFElement(f, g.coords().compose(c.coords())) == g);
            CHECK(minimal_polynomial(g) == *r.max_real_subfield_minpoly);
            CHECK(NumberField::create(*r.max_real_subfield_minpoly)->is_totally_real());
        }
    }

    TEST_CASE("documented field types")
    {
        FieldTypeReport qi = field({1, 0, 1})->field_type();
        CHECK(qi.kind == FieldKind::CM);
        CHECK(qi.conj_automorphism->coords() == RationalPoly{0, -1});
        CHECK(*qi.max_real_subfield_minpoly == RationalPoly{0, 1});
        FieldTypeReport z5 = field({1, 1, 1, 1, 1})->field_type();
        CHECK(z5.kind == FieldKind::CM);
        CHECK(*z5.max_real_subfield_minpoly == RationalPoly{-1, 1, 1});
        CHECK(field({-2, 0, 1})->field_type().kind == FieldKind::TotallyReal);
        // two real embeddings and a complex pair: neither totally real nor CM
        CHECK(field({1, -1, -1, -1, 1})->field_type().kind == FieldKind::Other);
        CHECK(field({-2, 0, 0, 1})->field_type().kind == FieldKind::Other);
        // totally imaginary but without a CM involution
        CHECK(field({Rational(3, 4), 0, 0, 0, 1})->field_type().kind == FieldKind::Other);
    }

    TEST_CASE("relative norm and trace to a subfield")
    {
        FieldPtr f = field({1, 1, 1, 1, 1});
        FieldTypeReport r = f->field_type();
        NFElement z = NFElement::generator(f);
        RelativeNormTrace nt = norm_trace_to_subfield(z, *r.max_real_generator);
        // z * conj(z) = 1 for a root of unity
        CHECK(nt.norm == NFElement::from_rational(f, 1));
        CHECK(nt.trace == z + NFElement(f, z.coords().compose(r.conj_automorphism->coords())));
    }

    TEST_CASE("square roots in totally real fields")
    {
        FieldPtr f = field({-2, 0, 1});
        NFElement t = NFElement::generator(f);
        NFElement y = (t + NFElement::from_rational(f, 1)) * (t + NFElement::from_rational(f, 1));
        auto s = square_root(y);
        REQUIRE(s);
        CHECK(*s * *s == y);
        CHECK_FALSE(square_root(t));
        FieldPtr q = field({0, 1});
        auto r = square_root(NFElement::from_rational(q, Rational(9, 4)));
        REQUIRE(r);
        CHECK(*r * *r == NFElement::from_rational(q, Rational(9, 4)));
    }
}
