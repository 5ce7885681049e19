#pragma once

#include <vector>

#include "cremona/numeric.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

/// Dense integer matrix, row-major. Sized for exact linear algebra on small
/// systems (companion blocks, pullback matrices), not numerics.
class IntegerMatrix {
public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    BigInt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }

    BigInt trace() const;

    IntegerMatrix operator+(const IntegerMatrix& o) const;
    IntegerMatrix operator-(const IntegerMatrix& o) const;
    IntegerMatrix operator*(const IntegerMatrix& o) const;
    IntegerMatrix scaled(const BigInt& s) const;
    bool operator==(const IntegerMatrix& o) const = default;

    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<BigInt> e_;
};

/// Characteristic polynomial det(xI - m), monic integer coefficients.
/// Faddeev-LeVerrier; every division is exact over Z (checked).
UnivariatePolynomial char_poly(const IntegerMatrix& m);

/// Same polynomial by an independent route: fraction-free (Bareiss)
/// determinants of (uI - m) at n+1 integer points, then exact Lagrange
/// interpolation. Used to cross-check char_poly.
UnivariatePolynomial char_poly_interpolated(const IntegerMatrix& m);

/// Fraction-free determinant (Bareiss). Input is copied.
BigInt bareiss_determinant(IntegerMatrix m);

}  // namespace cremona
