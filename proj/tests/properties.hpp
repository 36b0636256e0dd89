#pragma once

#include <string>
#include <vector>

#include "endoscope/roots.hpp"
#include "support.hpp"

namespace testsupport {

/* Each property runs `cases` randomized checks and returns the failures
 * (empty on success), so the doctest suite and the acceptance runner can
 * share them. */
using Failures = std::vector<std::string>;

inline FieldPtr random_corpus_field(Rng& rng)
{
    const auto& corpus = uniform(rng, 0, 1) ? cm_corpus() : totally_real_corpus();
    return NumberField::create(corpus[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(corpus.size()) - 1))]);
}

inline Failures property_norm_trace(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        FieldPtr k = random_corpus_field(rng);
        NFElement x = random_element(k, rng, 6, 4), y = random_element(k, rng, 6, 4);
        if (norm(x * y) != norm(x) * norm(y)) f.push_back("N(xy) in " + k->minpoly().to_string());
        if (trace(x + y) != trace(x) + trace(y)) f.push_back("Tr(x+y) in " + k->minpoly().to_string());
        if (x * x.inverse() != NFElement::from_rational(k, 1)) f.push_back("x * x^-1 in " + k->minpoly().to_string());
    }
    return f;
}

inline QuatElement random_quat(const AlgebraPtr& alg, Rng& rng, long bound)
{
    const FieldPtr& k = alg->base();
    auto part = [&] { return random_element(k, rng, bound, 3); };
    return QuatElement(alg, part(), part(), part(), part());
}

inline AlgebraPtr random_algebra(Rng& rng)
{
    FieldPtr k = uniform(rng, 0, 2) == 0
                     ? NumberField::create(RationalPoly{0, 1})
                     : NumberField::create(
                           quadratic_bases()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(quadratic_bases().size()) - 1))]);
    return QuatAlgebra::create(random_element(k, rng, 5, 2), random_element(k, rng, 5, 2));
}

inline Failures property_reduced_norm_trace(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        AlgebraPtr alg = random_algebra(rng);
        QuatElement x = random_quat(alg, rng, 4), y = random_quat(alg, rng, 4);
        if (reduced_norm(x * y) != reduced_norm(x) * reduced_norm(y)) f.push_back("Nrd(xy)");
        if (reduced_trace(x + y) != reduced_trace(x) + reduced_trace(y)) f.push_back("Trd(x+y)");
    }
    return f;
}

inline Failures property_cayley_hamilton(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        AlgebraPtr alg = random_algebra(rng);
        QuatElement x = random_quat(alg, rng, 4);
        QuatElement ch = x * x - x * reduced_trace(x) + QuatElement::scalar(alg, reduced_norm(x));
        if (!ch.is_zero()) f.push_back("x^2 - Trd x + Nrd != 0");
        QuatElement n = QuatElement::scalar(alg, reduced_norm(x));
        if (x * conjugate(x) != n || conjugate(x) * x != n) f.push_back("x conj(x) != Nrd");
    }
    return f;
}

inline Failures property_conjugation_closure(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        long kind = uniform(rng, 0, 3);
        EndomorphismSpec s = kind < 2 ? random_field_spec(rng, kind == 1) : random_quaternion_spec(rng, kind == 2);
        EigenvalueMultiset ev = rational_eigenvalues(s);
        int total = 0;
        for (const auto& g : ev.groups) {
            total += g.multiplicity * static_cast<int>(g.roots.roots.size());
            for (const auto& z : g.roots.roots) {
                ComplexBall c = z.ball().conj();
                int matches = 0;
                for (const auto& w : g.roots.roots) matches += w.ball().overlaps(c) ? 1 : 0;
                if (matches != 1) f.push_back("conjugate of a root of " + g.factor.to_string() + " not matched once");
            }
        }
        if (total != 2 * s.g) f.push_back("multiplicities do not sum to 2g");
    }
    return f;
}

inline Failures property_factor_round_trip(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        RationalPoly p = RationalPoly::constant(random_rational(rng, 5, 5));
        if (p.is_zero()) p = RationalPoly::constant(1);
        long parts = uniform(rng, 1, 4);
        for (long i = 0; i < parts; ++i) {
            RationalPoly q = random_poly(rng, static_cast<int>(uniform(rng, 1, 4)), 6);
            p *= q.pow(static_cast<unsigned>(uniform(rng, 1, 2)));
        }
        auto fac = factor_over_q(p);
        if (expand_factorization(p.leading(), fac) != p) f.push_back("round trip failed for " + p.to_string());
        for (const auto& x : fac)
            if (!x.factor.is_monic() || !is_irreducible(x.factor)) f.push_back("factor not monic irreducible");
    }
    return f;
}

inline Failures property_ring_axioms(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        RationalPoly a = random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 9, 4);
        RationalPoly b = random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 9, 4);
        RationalPoly c = random_poly(rng, static_cast<int>(uniform(rng, 0, 6)), 9, 4);
        Rational x = random_rational(rng, 20, 7);
        if ((a * b) * c != a * (b * c)) f.push_back("associativity");
        if (a * (b + c) != a * b + a * c) f.push_back("distributivity");
        if ((a * b).eval(x) != a.eval(x) * b.eval(x)) f.push_back("evaluation homomorphism");
        PolyDivMod d = divmod(a, b);
        if (d.quotient * b + d.remainder != a || d.remainder.degree() >= b.degree()) f.push_back("division");
    }
    return f;
}

inline Failures property_vieta_and_refinement(Rng& rng, int cases)
{
    Failures f;
    for (int t = 0; t < cases; ++t) {
        RationalPoly p = squarefree_part(random_poly(rng, static_cast<int>(uniform(rng, 1, 7)), 9, 2));
        if (p.degree() < 1) continue;
        auto r = isolate_roots(p, 128);
        ComplexBall sum = ComplexBall::exact(0, 128), prod = ComplexBall::exact(1, 128);
        for (const auto& z : r) {
            sum = sum + z.ball();
            prod = prod * z.ball();
        }
        RationalPoly m = p.monic();
        Rational s1 = -m.coeff(static_cast<std::size_t>(m.degree() - 1));
        Rational pn = (m.degree() % 2 ? -1 : 1) * m.coeff(0);
        if (!sum.re().contains(s1) || !sum.im().contains(0)) f.push_back("root sum for " + p.to_string());
        if (!prod.re().contains(pn) || !prod.im().contains(0)) f.push_back("root product for " + p.to_string());
        auto fine = refine_roots(p, r, 256);
        for (std::size_t i = 0; i < r.size(); ++i)
            if (mpfr_cmp(fine[i].radius.get(), r[i].radius.get()) > 0 || !fine[i].ball().overlaps(r[i].ball()))
                f.push_back("refinement widened a root of " + p.to_string());
    }
    return f;
}

}  // namespace testsupport
