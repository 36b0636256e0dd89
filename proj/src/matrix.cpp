#include "endoscope/matrix.hpp"

#include <utility>

#include "endoscope/error.hpp"

namespace endoscope {

RationalPoly charpoly(const RationalMatrix& input)
{
    std::size_t n = input.rows();
    if (n != input.cols()) fail(ErrorKind::validation, "charpoly of a non-square matrix");
    RationalMatrix h = input;
    // similarity transform to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(piv, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, piv), h(j, m));
        }
        Rational t = h(m, m - 1);
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h(i, m - 1) == 0) continue;
            Rational u = h(i, m - 1) / t;
            for (std::size_t j = 0; j < n; ++j) h(i, j) -= u * h(m, j);
            for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, i);
        }
    }
    std::vector<RationalPoly> p(n + 1);
    p[0] = RationalPoly::constant(1);
    for (std::size_t m = 1; m <= n; ++m) {
        p[m] = RationalPoly{-h(m - 1, m - 1), 1} * p[m - 1];
        Rational t = 1;
        for (std::size_t i = 1; i < m; ++i) {
            t *= h(m - i, m - i - 1);
            if (t == 0) break;
            p[m] -= (t * h(m - i - 1, m - 1)) * p[m - i - 1];
        }
    }
    return p[n];
}

Rational determinant(RationalMatrix m)
{
    std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::validation, "determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        Rational inv = 1 / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> b)
{
    std::size_t n = m.rows();
    if (n != m.cols() || b.size() != n) fail(ErrorKind::validation, "solve: shape mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m(piv, c) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            std::swap(b[piv], b[c]);
        }
        Rational inv = 1 / m(c, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
            b[i] -= f * b[c];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= m(i, i);
    return b;
}

std::size_t rank(RationalMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Integer determinant(IntegerMatrix m)
{
    std::size_t n = m.rows();
    if (n != m.cols()) fail(ErrorKind::validation, "determinant of a non-square matrix");
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntegerMatrix matrix_power(const IntegerMatrix& m, unsigned long exp)
{
    IntegerMatrix result = IntegerMatrix::identity(m.rows());
    IntegerMatrix base = m;
    while (exp) {
        if (exp & 1UL) result = result * base;
        exp >>= 1UL;
        if (exp) base = base * base;
    }
    return result;
}

RationalMatrix companion_matrix(const RationalPoly& monic)
{
    if (!monic.is_monic()) fail(ErrorKind::validation, "companion matrix needs a monic polynomial");
    auto n = static_cast<std::size_t>(monic.degree());
    RationalMatrix c(n, n);
    for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
    for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic.coeff(i);
    return c;
}

}  // namespace endoscope
