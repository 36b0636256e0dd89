#include <doctest.h>

#include "properties.hpp"

using namespace testsupport;

namespace {

constexpr int cases = 1000;

void expect_none(const Failures& f)
{
    CHECK(f.empty());
    for (std::size_t i = 0; i < f.size() && i < 5; ++i) MESSAGE(f[i]);
}

}  // namespace

TEST_SUITE("properties")
{
    TEST_CASE("field norm is multiplicative, trace additive") { Rng rng(101); expect_none(property_norm_trace(rng, cases)); }
    TEST_CASE("reduced norm is multiplicative, reduced trace additive")
    {
        Rng rng(102);
        expect_none(property_reduced_norm_trace(rng, cases));
    }
    TEST_CASE("quaternion Cayley-Hamilton and conjugation") { Rng rng(103); expect_none(property_cayley_hamilton(rng, cases)); }
    TEST_CASE("eigenvalue multisets are closed under conjugation")
    {
        Rng rng(104);
        expect_none(property_conjugation_closure(rng, cases));
    }
    TEST_CASE("factorization round trips") { Rng rng(105); expect_none(property_factor_round_trip(rng, cases)); }
    TEST_CASE("polynomial ring axioms") { Rng rng(106); expect_none(property_ring_axioms(rng, cases)); }
    TEST_CASE("root sums, products and refinement") { Rng rng(107); expect_none(property_vieta_and_refinement(rng, 300)); }
}
