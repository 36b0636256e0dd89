#include "endoscope/symmetric.hpp"

#include "endoscope/error.hpp"

namespace endoscope {

namespace {

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/* e_k from power sums t_1..t_k */
std::vector<Rational> elementary_from_sums(const std::vector<Rational>& t, std::size_t k)
{
    std::vector<Rational> e(k + 1);
    e[0] = 1;
    for (std::size_t m = 1; m <= k; ++m) {
        Rational acc = 0;
        for (std::size_t i = 1; i <= m; ++i) {
            Rational term = e[m - i] * t[i - 1];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        e[m] = acc / static_cast<long>(m);
    }
    return e;
}

}  // namespace

std::vector<Rational> power_sums(const RationalPoly& p, std::size_t count)
{
    if (p.degree() < 0) fail(ErrorKind::validation, "power sums of the zero polynomial");
    RationalPoly m = p.monic();
    auto n = static_cast<std::size_t>(m.degree());
    // e_i = (-1)^i a_{n-i}
    std::vector<Rational> e(n + 1);
    for (std::size_t i = 0; i <= n; ++i) e[i] = (i % 2 == 0 ? 1 : -1) * m.coeff(n - i);
    std::vector<Rational> s(count);
    for (std::size_t k = 1; k <= count; ++k) {
        Rational acc = 0;
        std::size_t top = std::min(k - 1, n);
        for (std::size_t i = 1; i <= top; ++i) {
            Rational term = e[i] * s[k - i - 1];
            if (i % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        if (k <= n) {
            Rational term = static_cast<long>(k) * e[k];
            if (k % 2 == 1)
                acc += term;
            else
                acc -= term;
        }
        s[k - 1] = acc;
    }
    return s;
}

RationalPoly from_power_sums(const std::vector<Rational>& sums, std::size_t n)
{
    if (sums.size() < n) fail(ErrorKind::internal, "not enough power sums");
    std::vector<Rational> e = elementary_from_sums(sums, n);
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) c[n - i] = (i % 2 == 0 ? 1 : -1) * e[i];
    return RationalPoly(c);
}

RationalPoly root_powers_poly(const RationalPoly& p, unsigned m)
{
    auto n = static_cast<std::size_t>(p.degree());
    std::vector<Rational> s = power_sums(p, n * m);
    std::vector<Rational> t(n);
    for (std::size_t j = 1; j <= n; ++j) t[j - 1] = s[j * m - 1];
    return from_power_sums(t, n);
}

RationalPoly pair_products_poly(const RationalPoly& a, const RationalPoly& b)
{
    auto n = static_cast<std::size_t>(a.degree() * b.degree());
    std::vector<Rational> sa = power_sums(a, n), sb = power_sums(b, n);
    std::vector<Rational> t(n);
    for (std::size_t j = 0; j < n; ++j) t[j] = sa[j] * sb[j];
    return from_power_sums(t, n);
}

RationalPoly subset_products_poly(const RationalPoly& p, unsigned k)
{
    auto n = static_cast<std::size_t>(p.degree());
    std::size_t count = binomial(n, k);
    if (count == 0) fail(ErrorKind::validation, "subset size exceeds the degree");
    if (count > 4096) fail(ErrorKind::degree_cap, "subset-product polynomial too large");
    std::vector<Rational> s = power_sums(p, k * count);
    std::vector<Rational> t(count);
    std::vector<Rational> u(k);
    for (std::size_t j = 1; j <= count; ++j) {
        // power sums of the j-th powers of the roots, then e_k of those
        for (std::size_t i = 1; i <= k; ++i) u[i - 1] = s[i * j - 1];
        t[j - 1] = elementary_from_sums(u, k)[k];
    }
    return from_power_sums(t, count);
}

}  // namespace endoscope
