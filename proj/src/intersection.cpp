#include "cremona/intersection.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cremona {

DivisorClass class_H() { return {BigInt(1), BigInt(0), BigInt(0)}; }
DivisorClass class_E() { return {BigInt(0), BigInt(1), BigInt(0)}; }
DivisorClass class_F() { return {BigInt(0), BigInt(0), BigInt(1)}; }
DivisorClass class_Y() { return {BigInt(1), BigInt(-2), BigInt(-1)}; }

IntegerMatrix pullback_matrix() {
    // columns: sigma*H = 2H - 3E - F, sigma*E = Y = H - 2E - F, sigma*F = F
    IntegerMatrix m(3, 3);
    m.at(0, 0) = 2;  m.at(0, 1) = 1;  m.at(0, 2) = 0;
    m.at(1, 0) = -3; m.at(1, 1) = -2; m.at(1, 2) = 0;
    m.at(2, 0) = -1; m.at(2, 1) = -1; m.at(2, 2) = 1;
    return m;
}

DivisorClass sigma_pullback(const DivisorClass& c) {
    auto v = pullback_matrix().apply({c.h, c.e, c.f});
    return {v[0], v[1], v[2]};
}

bool involution_check() {
    IntegerMatrix m = pullback_matrix();
    return m * m == IntegerMatrix::identity(3);
}

std::string quad_symbol_name(QuadSymbol s) {
    static const char* names[kQuadSymbolCount] = {"H.H", "H.E", "H.F",
                                                  "E.E", "E.F", "F.F"};
    return names[static_cast<std::size_t>(s)];
}

bool QuadraticCycleExpression::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const BigInt& c) { return c == 0; });
}

QuadraticCycleExpression QuadraticCycleExpression::operator+(
    const QuadraticCycleExpression& o) const {
    QuadraticCycleExpression r;
    for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
        r.coeffs[i] = coeffs[i] + o.coeffs[i];
    return r;
}

QuadraticCycleExpression QuadraticCycleExpression::operator-(
    const QuadraticCycleExpression& o) const {
    QuadraticCycleExpression r;
    for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
        r.coeffs[i] = coeffs[i] - o.coeffs[i];
    return r;
}

QuadraticCycleExpression QuadraticCycleExpression::scaled(
    const BigInt& c) const {
    QuadraticCycleExpression r;
    for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
        r.coeffs[i] = c * coeffs[i];
    return r;
}

std::string QuadraticCycleExpression::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < kQuadSymbolCount; ++i) {
        const BigInt& c = coeffs[i];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (a != 1) out << a.str() << "*";
        out << quad_symbol_name(static_cast<QuadSymbol>(i));
    }
    if (first) return "0";
    return out.str();
}

QuadraticCycleExpression symmetric_product(const DivisorClass& a,
                                           const DivisorClass& b) {
    QuadraticCycleExpression r;
    r[QuadSymbol::HH] = a.h * b.h;
    r[QuadSymbol::HE] = a.h * b.e + a.e * b.h;
    r[QuadSymbol::HF] = a.h * b.f + a.f * b.h;
    r[QuadSymbol::EE] = a.e * b.e;
    r[QuadSymbol::EF] = a.e * b.f + a.f * b.e;
    r[QuadSymbol::FF] = a.f * b.f;
    return r;
}

QuadraticCycleExpression RelationSet::reduce(
    QuadraticCycleExpression expr) const {
    for (int pass = 0; pass < 64; ++pass) {
        bool fired = false;
        for (const Rule& rule : rules) {
            BigInt c = expr[rule.target];
            if (c == 0) continue;
            fired = true;
            expr[rule.target] = 0;
            for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
                expr.coeffs[i] += c * rule.replacement[i];
        }
        if (!fired) return expr;
    }
    throw std::logic_error("relation set does not terminate on " +
                           expr.to_string());
}

bool RelationSet::check_confluence(std::uint64_t seed, int trials) const {
    std::vector<std::size_t> order(rules.size());
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        QuadraticCycleExpression expr;
        for (auto& c : expr.coeffs) c = rng.next_in(-9, 9);

        std::vector<QuadraticCycleExpression> results;
        std::sort(order.begin(), order.end());
        do {
            QuadraticCycleExpression cur = expr;
            bool diverged = true;
            for (int pass = 0; pass < 64; ++pass) {
                bool fired = false;
                for (std::size_t idx : order) {
                    const Rule& rule = rules[idx];
                    BigInt c = cur[rule.target];
                    if (c == 0) continue;
                    fired = true;
                    cur[rule.target] = 0;
                    for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
                        cur.coeffs[i] += c * rule.replacement[i];
                }
                if (!fired) {
                    diverged = false;
                    break;
                }
            }
            if (diverged) return false;
            results.push_back(cur);
        } while (std::next_permutation(order.begin(), order.end()));

        for (const auto& r : results)
            if (!(r == results.front())) return false;
    }
    return true;
}

RelationSet fourfold_rules() {
    RelationSet set;

    Rule he;
    he.target = QuadSymbol::HE;
    he.level = Rule::Level::Fourfold;
    he.label = "H.E = 0";
    set.rules.push_back(he);

    // Expand (sigma* H) . Y, which vanishes by the projection formula, and
    // solve the identity for F.F. Deriving the rule instead of writing it
    // down keeps it tied to the pullback action.
    QuadraticCycleExpression zero =
        symmetric_product(sigma_pullback(class_H()), class_Y());
    if (zero[QuadSymbol::FF] != 1)
        throw std::logic_error("expected unit F.F coefficient in (sigma*H).Y");
    Rule ff;
    ff.target = QuadSymbol::FF;
    ff.level = Rule::Level::Fourfold;
    for (std::size_t i = 0; i < kQuadSymbolCount; ++i)
        if (static_cast<QuadSymbol>(i) != QuadSymbol::FF)
            ff.replacement[i] = -zero.coeffs[i];
    QuadraticCycleExpression rhs;
    rhs.coeffs = ff.replacement;
    ff.label = "F.F = " + rhs.to_string();
    set.rules.push_back(ff);
    return set;
}

RelationSet assumption_rules() {
    RelationSet set = fourfold_rules();
    Rule hf;
    hf.target = QuadSymbol::HF;
    hf.level = Rule::Level::Assumption;
    hf.label = "H.F = 0";
    set.rules.push_back(hf);
    Rule ef;
    ef.target = QuadSymbol::EF;
    ef.level = Rule::Level::Assumption;
    ef.label = "E.F = 0";
    set.rules.push_back(ef);
    return set;
}

QuadraticCycleExpression expand_product(const DivisorClass& a,
                                        const DivisorClass& b,
                                        const RelationSet& rules) {
    return rules.reduce(symmetric_product(a, b));
}

QuadraticCycleExpression expand_square(const DivisorClass& c,
                                       const RelationSet& rules) {
    return expand_product(c, c, rules);
}

namespace {

// Degree-1 route: intersect a class against a general 1-cycle h, where
// E.h = t, F.h = 0. The surviving row is (H.h, E.h).
std::pair<BigInt, BigInt> linear_intersection_row(const DivisorClass& c) {
    return {c.h, c.e};
}

}  // namespace

DerivedCoefficients derive_recursion_coefficients() {
    RelationSet rules = assumption_rules();
    if (!rules.check_confluence(2024, 32))
        throw Error("assumption-level relation set is not confluent");

    DerivedCoefficients out;

    // 2-cycle route. The degree update is the reduced square of sigma*H;
    // the t update is the reduced -Y^2. Only H.H and E.E may survive, and
    // E.E = -t converts the E.E coefficient into the t coefficient.
    QuadraticCycleExpression dsq = expand_square(sigma_pullback(class_H()), rules);
    QuadraticCycleExpression tsq =
        expand_square(class_Y(), rules).scaled(BigInt(-1));
    for (QuadSymbol s : {QuadSymbol::HE, QuadSymbol::HF, QuadSymbol::EF,
                         QuadSymbol::FF}) {
        if (dsq[s] != 0 || tsq[s] != 0)
            throw Error("unexpected surviving symbol " + quad_symbol_name(s) +
                        " in the reduced identities");
    }
    out.degree2.d_from_d = dsq[QuadSymbol::HH];
    out.degree2.d_from_t = -dsq[QuadSymbol::EE];
    out.degree2.t_from_d = tsq[QuadSymbol::HH];
    out.degree2.t_from_t = -tsq[QuadSymbol::EE];

    // 1-cycle route: rows of the pullback against a general curve class.
    auto [dh, de] = linear_intersection_row(sigma_pullback(class_H()));
    auto [th, te] = linear_intersection_row(sigma_pullback(class_E()));
    out.degree1.d_from_d = dh;
    out.degree1.d_from_t = de;
    out.degree1.t_from_d = th;
    out.degree1.t_from_t = te;
    return out;
}

}  // namespace cremona
