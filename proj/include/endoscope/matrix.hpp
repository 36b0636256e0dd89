#pragma once

#include <optional>
#include <vector>

#include "endoscope/poly.hpp"
#include "endoscope/rational.hpp"

namespace endoscope {

template <class T>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static DenseMatrix identity(std::size_t n)
    {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b)
    {
        DenseMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b)
    {
        DenseMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }
    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;

/* Characteristic polynomial det(xI - M), via reduction to Hessenberg form. */
RationalPoly charpoly(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
/* Solves m * x = b; nullopt when m is singular. */
std::optional<std::vector<Rational>> solve(RationalMatrix m, std::vector<Rational> b);
std::size_t rank(RationalMatrix m);

/* Fraction-free (Bareiss) determinant. */
Integer determinant(IntegerMatrix m);
IntegerMatrix matrix_power(const IntegerMatrix& m, unsigned long exp);

/* Companion matrix of a monic polynomial (last column holds -a_0..-a_{n-1}). */
RationalMatrix companion_matrix(const RationalPoly& monic);

}  // namespace endoscope
