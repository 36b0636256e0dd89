#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "endoscope/error.hpp"
#include "endoscope/roots.hpp"
#include "endoscope/symmetric.hpp"
#include "support.hpp"

using namespace endoscope;
using namespace testsupport;

TEST_SUITE("exactmath")
{
    TEST_CASE("rationals stay canonical")
    {
        Rational q = make_rational(6, -4);
        CHECK(q.get_num() == -3);
        CHECK(q.get_den() == 2);
        CHECK(to_fraction_string(Rational(0)) == "0/1");
        CHECK(parse_rational(" -10 / 4 ") == Rational(-5, 2));
        CHECK_THROWS_AS(parse_rational("1/0"), Error);
        CHECK_THROWS_AS(parse_rational("x"), Error);
        Rational r;
        CHECK(perfect_square(Rational(9, 49), &r));
        CHECK(r == Rational(3, 7));
        CHECK_FALSE(perfect_square(Rational(2)));
    }

    TEST_CASE("polynomial arithmetic")
    {
        RationalPoly p{-1, 0, 1};
        RationalPoly q{1, 1};
        CHECK(p / q == RationalPoly{-1, 1});
        CHECK((p % q).is_zero());
        CHECK(gcd(p, RationalPoly{-1, 1}) == RationalPoly{-1, 1});
        CHECK(RationalPoly{0, 0, 0}.is_zero());
        CHECK(p.degree() == 2);
        CHECK(p.compose(q) == RationalPoly{0, 2, 1});
        CHECK(p.to_string() == "x^2 - 1");
        int sign = 0;
        CHECK(is_reciprocal(RationalPoly{1, -1, -1, -1, 1}, &sign));
        CHECK(sign == 1);
        CHECK(is_reciprocal(RationalPoly{-1, 0, 1}, &sign));
        CHECK(sign == -1);
        auto e = extended_gcd(RationalPoly{-2, 0, 1}, RationalPoly{1, 1});
        CHECK(e.s * RationalPoly{-2, 0, 1} + e.t * RationalPoly{1, 1} == e.gcd);
    }

    TEST_CASE("resultant matches the product of root differences")
    {
        // Res(x^2 - 2, x - 3) = 3^2 - 2
        CHECK(resultant(RationalPoly{-2, 0, 1}, RationalPoly{-3, 1}) == 7);
        // Res(x^2+1, x^2-2) = prod (i^2-2) = (-3)^2
        CHECK(resultant(RationalPoly{1, 0, 1}, RationalPoly{-2, 0, 1}) == 9);
    }

    TEST_CASE("squarefree decomposition")
    {
        RationalPoly a{-1, 1}, b{1, 0, 1};
        RationalPoly p = a * b.pow(2) * RationalPoly{2};
        auto d = squarefree_decomposition(p);
        REQUIRE(d.size() == 2);
        CHECK(d[0] == std::make_pair(a, 1));
        CHECK(d[1] == std::make_pair(b, 2));
        CHECK(squarefree_part(p) == a * b);
    }

    TEST_CASE("factorization of known polynomials")
    {
        auto f = factor_over_q(RationalPoly{-1, 0, 0, 0, 0, 0, 1});  // x^6 - 1
        REQUIRE(f.size() == 4);
        CHECK(f[0].factor == RationalPoly{-1, 1});
        CHECK(f[1].factor == RationalPoly{1, 1});
        CHECK(f[2].factor == RationalPoly{1, -1, 1});
        CHECK(f[3].factor == RationalPoly{1, 1, 1});
        CHECK(is_irreducible(RationalPoly{1, -1, -1, -1, 1}));
        CHECK(is_irreducible(RationalPoly{1, 0, 0, 0, 1}));
        CHECK_FALSE(is_irreducible(RationalPoly{4, 0, 0, 0, 1}));  // x^4 + 4 = Sophie Germain
        // x^4 + 1 is irreducible over Q but reducible modulo every prime
        CHECK(factor_over_q(RationalPoly{1, 0, 0, 0, 1}).size() == 1);
    }

    TEST_CASE("factorization of a Swinnerton-Dyer polynomial")
    {
        // minimal polynomial of sqrt2 + sqrt3 + sqrt5, irreducible with many modular factors
        RationalPoly p{576, 0, -960, 0, 352, 0, -40, 0, 1};
        CHECK(is_irreducible(p));
        RationalPoly q = p * RationalPoly{-3, 0, 1};
        auto f = factor_over_q(q);
        REQUIRE(f.size() == 2);
        CHECK(expand_factorization(q.leading(), f) == q);
    }

    TEST_CASE("root isolation on the documented inputs")
    {
        auto r = isolate_roots(RationalPoly{1, 0, 1});
        REQUIRE(r.size() == 2);
        for (const auto& z : r) {
            CHECK(std::fabs(z.re_mid.to_double()) < 1e-30);
            CHECK(std::fabs(std::fabs(z.im_mid.to_double()) - 1) < 1e-30);
            CHECK(mpfr_cmp_d(z.radius.get(), std::ldexp(1.0, -60)) < 0);
        }
        auto s = isolate_roots(RationalPoly{-13, 0, 1});
        REQUIRE(s.size() == 2);
        CHECK(s[0].certified_real);
        CHECK(s[1].re_mid.to_double() == doctest::Approx(std::sqrt(13.0)));
        CHECK(s[0].re_mid.sign() < 0);

        IrreducibleRoots a = analyze_irreducible(RationalPoly{1, -1, -1, -1, 1});
        int on = 0;
        std::vector<double> reals;
        for (std::size_t i = 0; i < a.roots.size(); ++i) {
            if (a.circle_side[i] == 0) ++on;
            if (a.roots[i].certified_real) reals.push_back(a.roots[i].re_mid.to_double());
        }
        CHECK(on == 2);
        REQUIRE(reals.size() == 2);
        std::sort(reals.begin(), reals.end());
        CHECK(reals[0] == doctest::Approx(0.58069).epsilon(1e-5));
        CHECK(reals[1] == doctest::Approx(1.72208).epsilon(1e-5));
        CHECK(reals[0] * reals[1] == doctest::Approx(1.0));
    }

    TEST_CASE("isolation rejects non-squarefree input")
    {
        CHECK_THROWS_AS(isolate_roots(RationalPoly{1, 2, 1}), Error);
    }

    TEST_CASE("root enclosures agree with Eigen eigenvalues")
    {
        Rng rng(11);
        for (int t = 0; t < 40; ++t) {
            RationalPoly p = squarefree_part(random_poly(rng, static_cast<int>(uniform(rng, 1, 9)), 9, 3));
            if (p.degree() < 1) continue;
            auto enc = isolate_roots(p);
            auto num = numeric_roots(p);
            REQUIRE(enc.size() == num.size());
            for (const auto& z : enc) {
                std::complex<double> c(z.re_mid.to_double(), z.im_mid.to_double());
                double best = 1e300;
                for (const auto& w : num) best = std::min(best, std::abs(c - w));
                CHECK(best < 1e-6);
            }
        }
    }

    TEST_CASE("rational reconstruction")
    {
        BigFloat x = BigFloat::from_rational(Rational(355, 113), 200);
        CHECK(rational_reconstruct(x, 1000) == Rational(355, 113));
        CHECK(rational_reconstruct(BigFloat::from_rational(Rational(-7, 3), 128), 10) == Rational(-7, 3));
    }

    TEST_CASE("power-sum transforms against matrix oracles")
    {
        // roots mu^m: charpoly of C^m; pair products: charpoly of C_a (x) C_b;
        // subset products: charpoly of the exterior power of C
        Rng rng(5);
        for (int t = 0; t < 25; ++t) {
            RationalPoly a = random_monic_integer(rng, static_cast<int>(uniform(rng, 1, 5)), 4);
            RationalPoly b = random_monic_integer(rng, static_cast<int>(uniform(rng, 1, 4)), 4);
            RationalMatrix ca = companion_matrix(a), cb = companion_matrix(b);
            auto m = static_cast<unsigned>(uniform(rng, 1, 4));
            CHECK(root_powers_poly(a, m) == charpoly(power(ca, m)));
            CHECK(pair_products_poly(a, b) == charpoly(kronecker(ca, cb)));
            auto k = static_cast<std::size_t>(uniform(rng, 1, a.degree()));
            CHECK(subset_products_poly(a, static_cast<unsigned>(k)) == charpoly(exterior_power(ca, k)));
        }
    }

    TEST_CASE("pair products against the resultant construction")
    {
        // prod (x - a_i b_j) = Res_y(a(y), y^deg b * b(x/y)) for monic a, b with b(0) != 0
        RationalPoly a{-2, 0, 1}, b{1, -1, -1, -1, 1};
        std::vector<Rational> xs, ys;
        for (int k = 0; k <= 8; ++k) {
            std::vector<Rational> c(5);
            for (int i = 0; i <= 4; ++i) c[static_cast<std::size_t>(4 - i)] = b.coeff(static_cast<std::size_t>(i)) * pow(Rational(k), i);
            xs.push_back(k);
            ys.push_back(resultant(a, RationalPoly(c)));
        }
        RationalPoly res = interpolate(xs, ys);
        CHECK(pair_products_poly(a, b) == res.monic());
    }

    TEST_CASE("subset products refuse oversized requests")
    {
        Rng rng(1);
        RationalPoly p = random_monic_integer(rng, 40, 2);
        CHECK_THROWS_AS(subset_products_poly(p, 20), Error);
    }
}
