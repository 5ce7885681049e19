#pragma once

#include <cstddef>
#include <optional>

#include "cremona/matrix.hpp"
#include "cremona/recursion.hpp"
#include "cremona/roots.hpp"
#include "cremona/successor.hpp"

namespace cremona {

// Block period: lcm of N together with tau(k) - k over the finite entries.
// Infinite entries feed no t value back, so they impose no constraint and
// are left out of the lcm set.
BigInt period_constant(const SuccessorFunction& tau);

// One C-block of the recursion written as a single linear map: M sends
//   v(i) = (d[iC+C], ..., d[iC+1], t[iC+C], ..., t[iC+1])
// to v(i+1), with d/t taken from either of the trace's twin sequences.
struct CompanionSystem {
    std::size_t C = 1;
    IntegerMatrix M;
    SuccessorFunction tau;
};

// Extracts v(block) from the d2/t2 sequences of a trace. Requires the trace
// to reach index block*C + C.
std::vector<BigInt> block_vector(const DegreeTrace& trace, std::size_t block,
                                 std::size_t C);

// Unrolls one block of the recursion by forward substitution. Verifies the
// result at build time by evolving the seed block three times against
// run_recursion; a mismatch is a bug, not an input error. Throws when C
// exceeds an internal size cap (the matrix has 4C^2 entries).
CompanionSystem build_companion(const SuccessorFunction& tau);

// Certified dominant root modulus of char_poly(M).
RadiusEstimate dynamical_degree(const SuccessorFunction& tau,
                                const BigRational& tol);

// The spectral radius together with the empirical growth ratio
// (d[m+C]/d[m])^(1/C) measured late in the trace. The two provably agree
// only when the trace is eventually positive and the dominant root is real
// and simple, so disagreement is reported, never asserted away.
struct DynamicalDegreeReport {
    RadiusEstimate spectral;
    std::optional<double> empirical;           // absent when d[m] <= 0
    bool agree = false;                        // within 1e-6 of the midpoint
    std::optional<std::size_t> realizability_violation;
    BigInt C;
};

DynamicalDegreeReport dynamical_degree_report(const SuccessorFunction& tau,
                                              const BigRational& tol);

}  // namespace cremona
