#include "cremona/matrix.hpp"

#include <stdexcept>

namespace cremona {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

BigInt IntegerMatrix::trace() const {
    if (!is_square()) throw Error("trace of non-square matrix");
    BigInt t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix addition: shape mismatch");
    IntegerMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error("matrix subtraction: shape mismatch");
    IntegerMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product: shape mismatch");
    IntegerMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

IntegerMatrix IntegerMatrix::scaled(const BigInt& s) const {
    IntegerMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

std::vector<BigInt> IntegerMatrix::apply(const std::vector<BigInt>& v) const {
    if (v.size() != cols_) throw Error("matrix apply: size mismatch");
    std::vector<BigInt> r(rows_, BigInt(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

UnivariatePolynomial char_poly(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<BigInt> coeffs(n + 1, BigInt(0));
    coeffs[n] = 1;
    if (n == 0) return UnivariatePolynomial::from_int_coefficients(coeffs);

    IntegerMatrix mk = m;
    BigInt c = -mk.trace();
    coeffs[n - 1] = c;
    for (std::size_t k = 2; k <= n; ++k) {
        IntegerMatrix shifted = mk + IntegerMatrix::identity(n).scaled(c);
        mk = m * shifted;
        BigInt t = mk.trace();
        if (t % BigInt(static_cast<long>(k)) != 0)
            throw std::logic_error("char_poly: inexact division in recurrence");
        c = -t / BigInt(static_cast<long>(k));
        coeffs[n - k] = c;
    }
    return UnivariatePolynomial::from_int_coefficients(coeffs);
}

BigInt bareiss_determinant(IntegerMatrix m) {
    if (!m.is_square()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    BigInt sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m.at(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // Exact by the Bareiss identity.
                m.at(i, j) = v / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

UnivariatePolynomial char_poly_interpolated(const IntegerMatrix& m) {
    if (!m.is_square()) throw Error("char_poly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return UnivariatePolynomial::from_int_coefficients({BigInt(1)});

    // Evaluate det(uI - m) at u = 0..n, then interpolate the degree-n poly.
    std::vector<BigRational> xs, ys;
    for (std::size_t u = 0; u <= n; ++u) {
        IntegerMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a.at(i, j) = (i == j ? BigInt(static_cast<long>(u)) : BigInt(0)) -
                             m.at(i, j);
        xs.emplace_back(static_cast<long>(u));
        ys.emplace_back(bareiss_determinant(std::move(a)));
    }
    return lagrange_interpolate(xs, ys);
}

}  // namespace cremona
