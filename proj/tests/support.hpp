#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "endoscope/classify.hpp"
#include "endoscope/factor.hpp"
#include "endoscope/matrix.hpp"

namespace testsupport {

using namespace endoscope;
using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, long num_bound, long den_bound)
{
    return make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

inline RationalPoly random_poly(Rng& rng, int degree, long num_bound, long den_bound = 1)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = random_rational(rng, num_bound, den_bound);
    while (c.back() == 0) c.back() = random_rational(rng, num_bound, den_bound);
    return RationalPoly(std::move(c));
}

inline RationalPoly random_monic_integer(Rng& rng, int degree, long bound)
{
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = uniform(rng, -bound, bound);
    c.back() = 1;
    return RationalPoly(std::move(c));
}

inline NFElement random_element(const FieldPtr& f, Rng& rng, long bound, long den_bound = 1)
{
    RationalPoly c;
    do {
        std::vector<Rational> v(static_cast<std::size_t>(f->degree()));
        for (auto& x : v) x = random_rational(rng, bound, den_bound);
        c = RationalPoly(std::move(v));
    } while (c.is_zero());
    return NFElement(f, c);
}

/* Fields of degree <= 4 with a known type; each entry is checked in the unit tests. */
inline const std::vector<RationalPoly>& totally_real_corpus()
{
    static const std::vector<RationalPoly> v = {
        {0, 1},          {-2, 0, 1},       {-3, 0, 1},        {-5, 0, 1},         {-1, -1, 1},
        {-13, 0, 1},     {1, -3, 0, 1},    {1, -2, -1, 1},    {2, 0, -4, 0, 1},   {1, 0, -10, 0, 1},
    };
    return v;
}

inline const std::vector<RationalPoly>& cm_corpus()
{
    static const std::vector<RationalPoly> v = {
        {1, 0, 1},       {1, 1, 1},        {2, 0, 1},        {3, 0, 1},         {7, 0, 1},
        {1, 0, 0, 0, 1}, {1, 1, 1, 1, 1},  {2, 0, 4, 0, 1},  {1, 0, -1, 0, 1},  {5, 0, 5, 0, 1},
    };
    return v;
}

inline const std::vector<RationalPoly>& quadratic_bases()
{
    static const std::vector<RationalPoly> v = {{-2, 0, 1}, {-3, 0, 1}, {-5, 0, 1}, {-13, 0, 1}, {-1, -1, 1}};
    return v;
}

/* integral element of Z[theta] (hence an algebraic integer) */
inline NFElement random_integral(const FieldPtr& f, Rng& rng, long bound) { return random_element(f, rng, bound, 1); }

inline EndomorphismSpec random_field_spec(Rng& rng, bool cm)
{
    const auto& corpus = cm ? cm_corpus() : totally_real_corpus();
    FieldPtr f = NumberField::create(corpus[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(corpus.size()) - 1))]);
    int step = cm ? f->degree() / 2 : f->degree();
    int g = step * static_cast<int>(uniform(rng, 1, 8 / step));
    return {random_integral(f, rng, 2), g};
}

/* Quaternion spec over a real quadratic base that is totally definite or
 * totally indefinite (mixed algebras are redrawn). */
inline EndomorphismSpec random_quaternion_spec(Rng& rng, bool want_definite, long coord_bound = 1)
{
    for (;;) {
        FieldPtr f = NumberField::create(
            quadratic_bases()[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(quadratic_bases().size()) - 1))]);
        NFElement alpha = random_integral(f, rng, 3);
        NFElement beta = random_integral(f, rng, 3);
        AlgebraPtr alg = QuatAlgebra::create(alpha, beta);
        Definiteness d = definiteness(*alg).kind;
        if (d == Definiteness::Mixed) continue;
        if ((d == Definiteness::TotallyDefinite) != want_definite) continue;
        auto part = [&] {
            std::vector<Rational> v(2);
            for (auto& x : v) x = uniform(rng, -coord_bound, coord_bound);
            return NFElement(f, RationalPoly(std::move(v)));
        };
        QuatElement el(alg, part(), part(), part(), part());
        if (el.is_zero()) continue;
        return {el, 4 * static_cast<int>(uniform(rng, 1, 2))};
    }
}

/* Double-precision eigenvalues of the companion matrix; independent of the
 * certified isolation code. */
inline std::vector<std::complex<double>> numeric_roots(const RationalPoly& p)
{
    RationalPoly m = p.monic();
    auto n = static_cast<Eigen::Index>(m.degree());
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i > 0) c(i, i - 1) = 1;
        c(i, n - 1) = -m.coeff(static_cast<std::size_t>(i)).get_d();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(c);
    std::vector<std::complex<double>> r;
    for (Eigen::Index i = 0; i < n; ++i) r.push_back(es.eigenvalues()(i));
    return r;
}

inline RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b)
{
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    return k;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

/* k-th exterior power: entries are the k x k minors.  Its eigenvalues are
 * the k-fold products of distinct eigenvalues of m. */
inline RationalMatrix exterior_power(const RationalMatrix& m, std::size_t k)
{
    std::vector<std::vector<std::size_t>> idx;
    subsets(m.rows(), k, idx);
    RationalMatrix w(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) {
            RationalMatrix minor(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(idx[a][i], idx[b][j]);
            w(a, b) = determinant(minor);
        }
    return w;
}

inline RationalMatrix power(const RationalMatrix& m, unsigned e)
{
    RationalMatrix r = RationalMatrix::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

}  // namespace testsupport
