#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cremona/numeric.hpp"

namespace cremona {

/// Univariate polynomial over the rationals, coefficients stored ascending.
/// Invariant: the zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<BigRational> coeffs);

    static UnivariatePolynomial from_int_coefficients(
        const std::vector<BigInt>& coeffs);
    /// c * x^power
    static UnivariatePolynomial monomial(const BigRational& c,
                                         std::size_t power);

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^i; zero beyond the degree.
    const BigRational& coeff(std::size_t i) const;
    const BigRational& leading() const;

    UnivariatePolynomial operator+(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator*(const UnivariatePolynomial& o) const;
    UnivariatePolynomial operator-() const;
    UnivariatePolynomial scaled(const BigRational& s) const;
    bool operator==(const UnivariatePolynomial& o) const = default;

    BigRational evaluate(const BigRational& x) const;
    UnivariatePolynomial derivative() const;

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
        const UnivariatePolynomial& divisor) const;

    /// Monic gcd (zero if both inputs are zero).
    static UnivariatePolynomial gcd(UnivariatePolynomial a,
                                    UnivariatePolynomial b);

    /// p / gcd(p, p'), monic. Same roots, all simple.
    UnivariatePolynomial squarefree_part() const;

    /// Exact multiplicity of the rational root r (0 if not a root).
    int multiplicity_of_root(const BigRational& r) const;

    /// Integer coefficient vector after clearing denominators and dividing by
    /// the integer content; sign chosen so the leading coefficient is
    /// positive. Zero polynomial gives an empty vector.
    std::vector<BigInt> primitive_integer_coefficients() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigRational> c_;
};

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
/// The xs must be pairwise distinct.
UnivariatePolynomial lagrange_interpolate(const std::vector<BigRational>& xs,
                                          const std::vector<BigRational>& ys);

/// Minimal linear recurrence of an integer sequence (exact Berlekamp-Massey):
/// the monic polynomial mu of least degree L with
///   sum_i mu_i * seq[m + i] = 0   for every window m + L < len(seq).
/// The constant sequence 0 gives mu = 1 (degree 0). Requires a nonempty
/// sequence; callers must supply at least 2L terms for the result to be the
/// true minimal recurrence of the infinite sequence.
UnivariatePolynomial minimal_recurrence(const std::vector<BigInt>& seq);

}  // namespace cremona
