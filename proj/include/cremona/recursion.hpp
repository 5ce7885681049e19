#pragma once

#include <cstddef>
#include <optional>

#include "cremona/numeric.hpp"
#include "cremona/roots.hpp"
#include "cremona/successor.hpp"

namespace cremona {

// Update constants of the degree recursion
//   d[i+1] = d_from_d * d[i] + d_from_t * t[pre]
//   t[i+1] = t_from_d * d[i] + t_from_t * t[pre]
// where pre is the unique tau-preimage of i+1 (t term absent when none).
struct RecursionCoefficients {
    BigInt d_from_d, d_from_t, t_from_d, t_from_t;
    bool operator==(const RecursionCoefficients&) const = default;
};

// The one site the constants (2, -3, 1, -2) live at. The intersection module
// re-derives them symbolically and compares against this.
RecursionCoefficients standard_coefficients();

// Two independently maintained copies of the (degree, curve-degree) recursion.
// The 1-sequences track first Cremona degrees, the 2-sequences second degrees;
// they satisfy the same recursion from the same seed, and check_equality
// verifies they stayed equal without ever sharing state.
struct DegreeTrace {
    std::vector<BigInt> d1, d2, t1, t2;  // each of length steps + 1
    std::size_t steps = 0;
};

// Runs both recursions from the seed d = 3, t = 0. Throws on invalid tau.
DegreeTrace run_recursion(const SuccessorFunction& tau, std::size_t steps);

// True iff d1 == d2 and t1 == t2 entrywise.
bool check_equality(const DegreeTrace& trace);

// First index where d <= 0 or t < 0, if any. Such a trace cannot come from
// degrees of effective cycles, so no geometric configuration realizes it.
std::optional<std::size_t> check_realizability(const DegreeTrace& trace);

struct GrowthClass {
    enum class Kind { Bounded, Polynomial, Exponential };
    Kind kind = Kind::Bounded;
    std::size_t degree = 0;               // Polynomial: d[i] ~ i^degree
    std::optional<RadiusEstimate> rate;   // Exponential: certified radius > 1
};

// Classifies the growth of the d2 sequence through its minimal linear
// recurrence: exponential if the recurrence has a root outside the closed
// unit disk, bounded if all roots are simple and inside, polynomial of degree
// (multiplicity of root 1) - 1 otherwise. Requires steps >= 4 * C where C is
// the companion block period; throws if the trace is too short to certify
// the recurrence.
GrowthClass classify_growth(const DegreeTrace& trace,
                            const SuccessorFunction& tau,
                            const BigRational& tol = BigRational(1,
                                                                 1000000000));

}  // namespace cremona
