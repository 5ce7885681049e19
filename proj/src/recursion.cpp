#include "cremona/recursion.hpp"

#include <sstream>

#include "cremona/companion.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

RecursionCoefficients standard_coefficients() {
    return {BigInt(2), BigInt(-3), BigInt(1), BigInt(-2)};
}

DegreeTrace run_recursion(const SuccessorFunction& tau, std::size_t steps) {
    auto bad = tau.validate();
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "invalid successor function:";
        for (const auto& b : bad) msg << " " << b << ";";
        throw Error(msg.str());
    }

    const RecursionCoefficients c = standard_coefficients();
    DegreeTrace trace;
    trace.steps = steps;
    trace.d1 = {BigInt(3)};
    trace.t1 = {BigInt(0)};
    trace.d2 = {BigInt(3)};
    trace.t2 = {BigInt(0)};
    for (std::size_t i = 0; i < steps; ++i) {
        std::int64_t next = static_cast<std::int64_t>(i) + 1;
        auto pre = tau.tau_preimage(next);
        // tau(p) >= p + 2 puts any preimage strictly below i, so the t value
        // it refers to is already computed
        std::size_t p = 0;
        if (pre) {
            if (*pre < 1 || *pre > static_cast<std::int64_t>(i))
                throw Error("tau_preimage out of range (invalid tau slipped through)");
            p = static_cast<std::size_t>(*pre);
        }
        BigInt tp1 = pre ? trace.t1[p] : BigInt(0);
        BigInt tp2 = pre ? trace.t2[p] : BigInt(0);
        trace.d1.push_back(c.d_from_d * trace.d1[i] + c.d_from_t * tp1);
        trace.t1.push_back(c.t_from_d * trace.d1[i] + c.t_from_t * tp1);
        trace.d2.push_back(c.d_from_d * trace.d2[i] + c.d_from_t * tp2);
        trace.t2.push_back(c.t_from_d * trace.d2[i] + c.t_from_t * tp2);
    }
    return trace;
}

bool check_equality(const DegreeTrace& trace) {
    return trace.d1 == trace.d2 && trace.t1 == trace.t2;
}

std::optional<std::size_t> check_realizability(const DegreeTrace& trace) {
    for (std::size_t i = 0; i <= trace.steps; ++i) {
        if (trace.d1[i] <= 0 || trace.d2[i] <= 0 || trace.t1[i] < 0 ||
            trace.t2[i] < 0)
            return i;
    }
    return std::nullopt;
}

namespace {

// Divides out x^k and returns the integer coefficient vector of a monic
// rational polynomial, throwing if any coefficient is non-integral (which
// here means the recurrence was fitted to too short a window).
std::vector<BigInt> integral_coefficients(const UnivariatePolynomial& mu) {
    std::vector<BigInt> out;
    bool leading_zeros = true;
    for (int i = 0; i <= mu.degree(); ++i) {
        BigRational c = mu.coeff(static_cast<std::size_t>(i));
        if (leading_zeros && c == 0) continue;
        leading_zeros = false;
        if (den(c) != 1)
            throw Error(
                "minimal recurrence has non-integer coefficients; trace too "
                "short to certify it");
        out.push_back(num(c));
    }
    return out;
}

}  // namespace

GrowthClass classify_growth(const DegreeTrace& trace,
                            const SuccessorFunction& tau,
                            const BigRational& tol) {
    BigInt c_big = period_constant(tau);
    if (c_big > 1 << 20) throw Error("companion period too large to classify");
    std::size_t C = static_cast<std::size_t>(c_big);
    if (trace.steps < 4 * C)
        throw Error("trace too short: classify_growth needs at least 4*C = " +
                    std::to_string(4 * C) + " steps");

    UnivariatePolynomial mu = minimal_recurrence(trace.d2);

    // the fitted recurrence must annihilate every window of the data we have
    std::size_t L = mu.degree() < 0 ? 0 : static_cast<std::size_t>(mu.degree());
    if (2 * L + 2 > trace.d2.size())
        throw Error("trace too short to certify the minimal recurrence");
    for (std::size_t m = 0; m + L < trace.d2.size(); ++m) {
        BigRational acc(0);
        for (std::size_t i = 0; i <= L; ++i)
            acc += mu.coeff(i) * BigRational(trace.d2[m + i]);
        if (acc != 0)
            throw Error("trace too short to certify the minimal recurrence");
    }

    std::vector<BigInt> core = integral_coefficients(mu);
    GrowthClass g;
    if (core.size() <= 1) {
        // recurrence x^k (or constant): trace is eventually zero
        g.kind = GrowthClass::Kind::Bounded;
        return g;
    }
    UnivariatePolynomial core_poly =
        UnivariatePolynomial::from_int_coefficients(core);
    if (!all_roots_in_closed_unit_disk(core_poly)) {
        g.kind = GrowthClass::Kind::Exponential;
        g.rate = dominant_modulus(core_poly, tol);
        return g;
    }
    if (core_poly.squarefree_part() == core_poly) {
        g.kind = GrowthClass::Kind::Bounded;
        return g;
    }
    std::size_t mult = core_poly.multiplicity_of_root(BigRational(1));
    if (mult < 2)
        throw Error(
            "unbounded trace with unit-modulus spectrum away from 1; growth "
            "is not polynomial in the reported sense");
    g.kind = GrowthClass::Kind::Polynomial;
    g.degree = mult - 1;
    return g;
}

}  // namespace cremona
