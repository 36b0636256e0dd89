#include <doctest.h>

#include "endoscope/cli.hpp"
#include "endoscope/error.hpp"
#include "support.hpp"

using namespace endoscope;
using namespace testsupport;

namespace {

AlgebraPtr over_q(long a, long b)
{
    FieldPtr q = NumberField::create(RationalPoly{0, 1});
    return QuatAlgebra::create(NFElement::from_rational(q, a), NFElement::from_rational(q, b));
}

/* Nrd from the definition a^2 - alpha b^2 - beta c^2 + alpha beta d^2 */
NFElement nrd_formula(const QuatElement& x)
{
    const NFElement& al = x.algebra()->alpha();
    const NFElement& be = x.algebra()->beta();
    return x.a() * x.a() - al * x.b() * x.b() - be * x.c() * x.c() + al * be * x.d() * x.d();
}

}  // namespace

TEST_SUITE("quaternion")
{
    TEST_CASE("multiplication table")
    {
        AlgebraPtr h = over_q(-1, -1);
        QuatElement i = QuatElement::i(h), j = QuatElement::j(h), k = QuatElement::k(h);
        QuatElement m1 = QuatElement::scalar(h, -1);
        CHECK(i * i == m1);
        CHECK(j * j == m1);
        CHECK(k * k == m1);
        CHECK(i * j == k);
        CHECK(j * i == -k);
        CHECK(i * j * k == m1);
        AlgebraPtr b = over_q(3, 5);
        CHECK(QuatElement::i(b) * QuatElement::i(b) == QuatElement::scalar(b, 3));
        CHECK(QuatElement::k(b) * QuatElement::k(b) == QuatElement::scalar(b, -15));
    }

    TEST_CASE("algebra validation")
    {
        FieldPtr q = NumberField::create(RationalPoly{0, 1});
        CHECK_THROWS_AS(QuatAlgebra::create(NFElement::from_rational(q, 0), NFElement::from_rational(q, 1)), Error);
        FieldPtr ci = NumberField::create(RationalPoly{1, 0, 1});
        CHECK_THROWS_AS(QuatAlgebra::create(NFElement::from_rational(ci, 1), NFElement::from_rational(ci, 1)), Error);
    }

    TEST_CASE("reduced norm, trace and the three charpoly paths")
    {
        Rng rng(9);
        for (int t = 0; t < 20; ++t) {
            EndomorphismSpec s = random_quaternion_spec(rng, t % 2 == 0, 3);
            const QuatElement& x = s.quat_element();
            CHECK(reduced_norm(x) == nrd_formula(x));
            CHECK(reduced_trace(x) == x.a() * Rational(2));
            RationalPoly q = reduced_charpoly_over_q(x);
            CHECK(q == reduced_charpoly_over_q_resultant(x));
            CHECK(regular_representation_charpoly(x) == q * q);
            CHECK(q.degree() == 2 * x.algebra()->base()->degree());
        }
    }

    TEST_CASE("definiteness by real-place signs")
    {
        CHECK(definiteness(*over_q(-1, -1)).kind == Definiteness::TotallyDefinite);
        CHECK(definiteness(*over_q(-1, 3)).kind == Definiteness::TotallyIndefinite);
        FieldPtr f = NumberField::create(RationalPoly{-2, 0, 1});
        NFElement t = NFElement::generator(f);
        // sqrt2 changes sign between the two embeddings
        AlgebraPtr mixed = QuatAlgebra::create(t, NFElement::from_rational(f, -1));
        CHECK(definiteness(*mixed).kind == Definiteness::Mixed);
        for (const auto& ex : paper_examples()) {
            EndomorphismSpec s = paper_example_spec(ex);
            CHECK(definiteness(*s.quat_element().algebra()).kind == Definiteness::TotallyIndefinite);
        }
    }

    TEST_CASE("indefinite examples have reduced norm one and Salem quartics")
    {
        for (const auto& ex : paper_examples()) {
            EndomorphismSpec s = paper_example_spec(ex);
            const QuatElement& f = s.quat_element();
            CHECK(reduced_norm(f) == NFElement::from_rational(f.algebra()->base(), 1));
            CHECK(reduced_charpoly_over_q(f) == ex.expected_quartic);
            // f * conj(f) = Nrd(f)
            CHECK(f * conjugate(f) == QuatElement::scalar(f.algebra(), 1));
        }
    }

    TEST_CASE("sqrt(t) minimal polynomial")
    {
        AlgebraPtr h = over_q(-1, -1);
        QuatElement x = QuatElement::i(h) + QuatElement::j(h);
        // t = b^2 alpha + c^2 beta = -2
        CHECK(discriminant_t(x) == NFElement::from_rational(h->base(), -2));
        CHECK(sqrt_t_minpoly(x) == RationalPoly{2, 0, 1});
    }

    TEST_CASE("Hilbert symbols over Q")
    {
        CHECK(hilbert_symbol(-1, -1, 0) == -1);
        CHECK(hilbert_symbol(-1, -1, 2) == -1);
        CHECK(hilbert_symbol(-1, -1, 3) == 1);
        CHECK(hilbert_symbol(2, 3, 3) == -1);
        CHECK(hilbert_symbol(2, 3, 2) == -1);
        CHECK(hilbert_symbol(1, 7, 7) == 1);
        // product formula on random pairs
        Rng rng(21);
        for (int t = 0; t < 50; ++t) {
            Rational a = uniform(rng, 1, 60) * (uniform(rng, 0, 1) ? 1 : -1);
            Rational b = uniform(rng, 1, 60) * (uniform(rng, 0, 1) ? 1 : -1);
            int prod = hilbert_symbol(a, b, 0);
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L, 53L, 59L})
                prod *= hilbert_symbol(a, b, p);
            CHECK(prod == 1);
        }
        CHECK(is_division_over_q(-1, -1));
        CHECK_FALSE(is_division_over_q(1, 1));
        CHECK(is_division_over_q(3, 5) == true);
    }

    TEST_CASE("split witness search")
    {
        SplitReport r = split_witness_search(over_q(1, 1), 4);
        REQUIRE(r.status == SplitStatus::witness);
        CHECK(reduced_norm(*r.witness).is_zero());
        CHECK_FALSE(r.witness->is_zero());
        SplitReport s = split_witness_search(over_q(3, -2), 6);
        REQUIRE(s.status == SplitStatus::witness);
        CHECK(reduced_norm(*s.witness).is_zero());
        CHECK(split_witness_search(over_q(-1, -1), 4).status == SplitStatus::division);
        CHECK(split_witness_search(over_q(3, 5), 4).status == SplitStatus::division);
        // beta = 1 is a square, so (sqrt2, 1) over Q(sqrt2) is split
        FieldPtr f = NumberField::create(RationalPoly{-2, 0, 1});
        AlgebraPtr m = QuatAlgebra::create(NFElement::generator(f), NFElement::from_rational(f, 1));
        SplitReport w = split_witness_search(m, 3);
        REQUIRE(w.status == SplitStatus::witness);
        CHECK(reduced_norm(*w.witness).is_zero());
    }
}
