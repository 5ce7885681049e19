#pragma once

#include <string>
#include <vector>

#include "cremona/numeric.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

enum class RadiusMethod { Graeffe, Sturm, GrowthRatio };

std::string to_string(RadiusMethod m);

/// Certified enclosure of a nonnegative quantity (a root modulus or growth
/// rate). Invariant: 0 <= lower <= upper; on success upper - lower is within
/// the tolerance that was requested.
struct RadiusEstimate {
    BigRational lower;
    BigRational upper;
    RadiusMethod method;

    bool contains(const BigRational& x) const {
        return lower <= x && x <= upper;
    }
    BigRational width() const { return upper - lower; }
};

/// Closed interval with rational endpoints; lo == hi marks an exact root.
struct RootInterval {
    BigRational lo;
    BigRational hi;
};

/// Number of distinct real roots of p in the closed interval [lo, hi],
/// by Sturm's theorem. p nonzero; multiplicities do not count.
int count_real_roots(const UnivariatePolynomial& p, const BigRational& lo,
                     const BigRational& hi);

/// Pairwise-disjoint closed rational intervals, one distinct real root each,
/// covering every real root of p in [lo, hi]. p is squarefree-reduced
/// internally. Requires lo <= hi and p nonzero.
std::vector<RootInterval> sturm_real_roots(const UnivariatePolynomial& p,
                                           const BigRational& lo,
                                           const BigRational& hi);

/// Exact decision: are all complex roots of p inside the closed unit disk?
/// Graeffe root-squaring with cycle detection plus the binomial coefficient
/// bound (a monic integer polynomial whose roots all lie in the closed disk
/// has all roots zero or roots of unity). Requires a nonzero p whose
/// primitive form has leading coefficient +-1.
bool all_roots_in_closed_unit_disk(const UnivariatePolynomial& p);

/// Certified enclosure of max |root| of a nonconstant polynomial, width at
/// most tol. Decision ladder: exact special cases (unit-circle spectra via
/// Graeffe cycles, all-real spectra via Sturm, small degrees via the
/// modulus-squared resultant), then budgeted Graeffe sandwiching refined
/// against Cauchy-type bounds and Sturm isolation of real roots. Throws
/// ToleranceError with the best interval if the budget is exhausted.
RadiusEstimate dominant_modulus(const UnivariatePolynomial& p,
                                const BigRational& tol);

/// One Graeffe root-squaring step on a primitive integer coefficient vector
/// (ascending): returns the primitive polynomial whose roots are the squares.
std::vector<BigInt> graeffe_step(const std::vector<BigInt>& coeffs);

}  // namespace cremona
