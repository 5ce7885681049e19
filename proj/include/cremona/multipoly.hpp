#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cremona/numeric.hpp"

namespace cremona {

// Variable slots: x, y, z, w, v are homogeneous coordinates (P^4 at most),
// slot 5 is the family parameter s.
inline constexpr std::size_t kVarCount = 6;
inline constexpr std::size_t kProjectiveVars = 5;
inline constexpr std::size_t kParamVar = 5;

extern const char kVarNames[kVarCount];  // "xyzwvs"

using Monomial = std::array<std::uint16_t, kVarCount>;

struct Term {
    Monomial mono;
    BigInt coeff;

    bool operator==(const Term&) const = default;
};

// Sparse integer polynomial in up to six variables. Terms are kept sorted in
// descending lexicographic monomial order with nonzero coefficients.
class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const BigInt& c);
    static MultiPoly variable(std::size_t var, std::uint16_t power = 1);
    // Sorts, merges duplicates, drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& leading() const;

    int degree(std::size_t var) const;      // -1 for the zero polynomial
    int total_degree() const;               // over all six slots
    // Total degree over x..v only; the parameter does not count.
    int projective_degree() const;
    bool is_projective_homogeneous() const;
    bool uses_var(std::size_t var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const BigInt& c) const;
    MultiPoly scaled_by_term(const Monomial& m, const BigInt& c) const;
    bool operator==(const MultiPoly&) const = default;

    // Signed integer content: gcd of coefficients carrying the sign of the
    // leading one, so primitive_part always has a positive leading term.
    BigInt content() const;
    MultiPoly primitive_part() const;

    // P(s = p/q) scaled by q^(s-degree) to stay integral; callers work with
    // projective classes, so the global factor is harmless.
    MultiPoly specialize_param(const BigRational& value) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

// Quotient a / b, throwing std::logic_error when the division is not exact.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

// Full integer-polynomial gcd (content times primitive gcd), computed by
// recursive subresultant remainder sequences over the highest active
// variable. Result has positive leading coefficient; gcd(0, 0) = 0.
MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly multi_gcd_many(const std::vector<MultiPoly>& polys);

// One-sided coprimality certificate: restricts the polynomials to a random
// line mod a fixed 61-bit prime and runs a univariate gcd chain. Returns
// true only when gcd = 1 is proved; false means "unknown", so callers fall
// back to the exact gcd. Requires every input projectively homogeneous and
// free of the parameter variable.
bool coprime_certificate(const std::vector<const MultiPoly*>& polys);

// Substitutes args[i] for variable i in f (f must use only the projective
// variables and at most args.size() of them). Products for repeated
// monomials are computed once and shared.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& args);

// Substitutes the same arguments into several polynomials, sharing the
// power and monomial-product caches across all of them.
std::vector<MultiPoly> substitute_many(const std::vector<MultiPoly>& fs,
                                       const std::vector<MultiPoly>& args);

}  // namespace cremona
