#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/numeric.hpp"
#include "cremona/recursion.hpp"

namespace cremona {

// Divisor class on the resolved reflection, over the ordered rank-3 basis
// (H, E, F): hyperplane pullback, exceptional class over the reflection
// point, exceptional class over the tangency surface.
struct DivisorClass {
    BigInt h, e, f;

    DivisorClass operator+(const DivisorClass& o) const {
        return {h + o.h, e + o.e, f + o.f};
    }
    DivisorClass operator-(const DivisorClass& o) const {
        return {h - o.h, e - o.e, f - o.f};
    }
    DivisorClass scaled(const BigInt& c) const { return {c * h, c * e, c * f}; }
    bool operator==(const DivisorClass&) const = default;
};

DivisorClass class_H();
DivisorClass class_E();
DivisorClass class_F();
// Strict transform of the contracted surface: H - 2E - F.
DivisorClass class_Y();

// Pullback action of the lifted reflection, columns = images of (H, E, F).
IntegerMatrix pullback_matrix();
DivisorClass sigma_pullback(const DivisorClass& c);

// The lift is an involution on the lattice: pullback squared is the identity.
bool involution_check();

// Formal degree-2 intersection symbols. Products are symmetric, so six
// symbols span everything quadratic in (H, E, F).
enum class QuadSymbol : std::size_t { HH = 0, HE, HF, EE, EF, FF };
inline constexpr std::size_t kQuadSymbolCount = 6;
std::string quad_symbol_name(QuadSymbol s);

struct QuadraticCycleExpression {
    std::array<BigInt, kQuadSymbolCount> coeffs{};

    BigInt& operator[](QuadSymbol s) {
        return coeffs[static_cast<std::size_t>(s)];
    }
    const BigInt& operator[](QuadSymbol s) const {
        return coeffs[static_cast<std::size_t>(s)];
    }
    bool is_zero() const;
    QuadraticCycleExpression operator+(const QuadraticCycleExpression&) const;
    QuadraticCycleExpression operator-(const QuadraticCycleExpression&) const;
    QuadraticCycleExpression scaled(const BigInt& c) const;
    bool operator==(const QuadraticCycleExpression&) const = default;
    std::string to_string() const;
};

// Bilinear symmetric product of two classes, no relations applied.
QuadraticCycleExpression symmetric_product(const DivisorClass& a,
                                           const DivisorClass& b);

// Oriented substitution rule: target symbol := linear combination of the
// others. Fourfold-level rules hold on the resolved cubic unconditionally;
// assumption-level rules additionally use the genericity assumptions on how
// consecutive centers meet.
struct Rule {
    enum class Level { Fourfold, Assumption };
    QuadSymbol target;
    std::array<BigInt, kQuadSymbolCount> replacement{};  // entry at target is 0
    Level level = Level::Fourfold;
    std::string label;
};

struct RelationSet {
    std::vector<Rule> rules;

    // Applies rules to a fixpoint. Throws if reduction fails to terminate.
    QuadraticCycleExpression reduce(QuadraticCycleExpression expr) const;

    // Applies the rules in every order on random expressions and compares;
    // false on any mismatch or any non-terminating order.
    bool check_confluence(std::uint64_t seed, int trials) const;
};

// H.E = 0 plus the rewrite for F.F obtained by expanding the projection
// formula identity (sigma* H) . Y = 0 and solving for F.F.
RelationSet fourfold_rules();
// Fourfold rules plus H.F = 0 and E.F = 0.
RelationSet assumption_rules();

QuadraticCycleExpression expand_product(const DivisorClass& a,
                                        const DivisorClass& b,
                                        const RelationSet& rules);
QuadraticCycleExpression expand_square(const DivisorClass& c,
                                       const RelationSet& rules);

// Recursion coefficients read off the reduced intersection identities, once
// from the 2-cycle route (E.E = -t) and once from the 1-cycle route
// (E.h = t, F.h = 0). Both must agree with standard_coefficients(); a shared
// test keeps this module and the recursion in lockstep.
struct DerivedCoefficients {
    RecursionCoefficients degree2;
    RecursionCoefficients degree1;
};

DerivedCoefficients derive_recursion_coefficients();

}  // namespace cremona
