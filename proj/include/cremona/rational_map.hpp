#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/multipoly.hpp"
#include "cremona/roots.hpp"

namespace cremona {

/// Rational self-map of P^n given by n+1 homogeneous coordinate polynomials
/// of one shared degree. Construction canonicalizes: any common polynomial
/// factor is divided out, the integer content is reduced to 1, and the first
/// nonzero component gets a positive leading coefficient. Equality of the
/// canonical forms is equality of the maps.
class RationalMapPn {
public:
    /// Takes ownership of the component list (2 to 5 entries, zero entries
    /// allowed but not all, no parameter s). Throws Error on mixed degrees
    /// or inhomogeneous components.
    explicit RationalMapPn(std::vector<MultiPoly> components);

    static RationalMapPn parse(const std::string& text);
    static RationalMapPn identity(std::size_t ambient);

    const std::vector<MultiPoly>& components() const { return comps_; }
    std::size_t ambient() const { return comps_.size() - 1; }
    std::int64_t degree() const { return degree_; }
    bool operator==(const RationalMapPn&) const = default;
    std::string to_string() const;

private:
    std::vector<MultiPoly> comps_;
    std::int64_t degree_ = 0;
};

/// f after g. Throws Error when the ambient spaces differ or the composite
/// collapses to zero in every coordinate.
RationalMapPn compose(const RationalMapPn& f, const RationalMapPn& g);

struct DegreeSequence {
    std::vector<std::int64_t> degrees;     // degrees[k] = deg f^k, so [0] == 1
    std::optional<RadiusEstimate> growth;  // enclosure of the growth rate
    bool capped = false;                   // stopped early at the degree cap
};

/// Degrees of the first iterates of f, computed by exact composition and
/// reduction. Stops before any step whose degree bound would exceed
/// degree_cap and flags the sequence as capped. The growth enclosure brackets
/// the exact last ratio against a log-linear regression slope.
DegreeSequence iterate_degrees(const RationalMapPn& f, std::size_t max_iterates,
                               std::int64_t degree_cap = 4096);

struct SubmultiplicativityReport {
    std::int64_t composite;  // deg(f after g)
    std::int64_t product;    // deg f * deg g
    bool holds;              // composite <= product
};

SubmultiplicativityReport submultiplicativity_check(const RationalMapPn& f,
                                                    const RationalMapPn& g);

/// Degree of the closure of the monomial curve t -> (t^a_1 : ... : t^a_n : 1)
/// in P^n: the spread max(exponents, 0) - min(exponents, 0). Requires
/// exponents.size() == ambient and at least one nonzero exponent.
std::int64_t orbit_closure_degree(const std::vector<std::int64_t>& exponents,
                                  std::size_t ambient);

/// A family of self-maps of P^n depending polynomially on the parameter s.
class ParametricMap {
public:
    explicit ParametricMap(std::vector<MultiPoly> components);
    static ParametricMap parse(const std::string& text);

    const std::vector<MultiPoly>& components() const { return comps_; }
    std::size_t ambient() const { return comps_.size() - 1; }
    /// Degree of the generic member.
    std::int64_t family_degree() const { return degree_; }

private:
    std::vector<MultiPoly> comps_;
    std::int64_t degree_ = 0;
};

struct Specialization {
    /// Empty when every component vanished at this parameter value.
    std::optional<RationalMapPn> map;
    /// True when the specialized map lost degree or a component vanished.
    bool degenerate = false;
};

Specialization specialize(const ParametricMap& family, const BigRational& s0);

struct ScanRow {
    BigRational s;
    std::int64_t degree = 0;  // degree of the iterate-th iterate, 0 if gone
    bool degenerate = false;
    bool capped = false;
};

/// Specializes the family at every grid value and records the degree of the
/// iterate-th iterate (iterate >= 1).
std::vector<ScanRow> family_degree_scan(const ParametricMap& family,
                                        const std::vector<BigRational>& grid,
                                        std::size_t iterate,
                                        std::int64_t degree_cap = 4096);

}  // namespace cremona
