#include "cremona/companion.hpp"

#include <cmath>
#include <stdexcept>

namespace cremona {

BigInt period_constant(const SuccessorFunction& tau) {
    auto bad = tau.validate();
    if (!bad.empty()) throw Error("period_constant: invalid successor function");
    std::vector<BigInt> set{BigInt(tau.period)};
    for (std::int64_t k = 1; k <= tau.period; ++k) {
        const auto& v = tau.successors[static_cast<std::size_t>(k - 1)];
        if (v) set.emplace_back(*v - k);
    }
    return lcm_all(set);
}

std::vector<BigInt> block_vector(const DegreeTrace& trace, std::size_t block,
                                 std::size_t C) {
    std::size_t top = block * C + C;
    if (top > trace.steps)
        throw Error("block_vector: trace shorter than requested block");
    std::vector<BigInt> v;
    v.reserve(2 * C);
    for (std::size_t j = 0; j < C; ++j) v.push_back(trace.d2[top - j]);
    for (std::size_t j = 0; j < C; ++j) v.push_back(trace.t2[top - j]);
    return v;
}

namespace {

constexpr std::size_t kMaxCompanionPeriod = 512;

// Coefficient vector over the 2C entries of the previous block.
using Row = std::vector<BigInt>;

Row unit_row(std::size_t size, std::size_t pos) {
    Row r(size, BigInt(0));
    r[pos] = 1;
    return r;
}

Row combine(const Row& a, const BigInt& ca, const Row& b, const BigInt& cb) {
    Row r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = ca * a[i] + cb * b[i];
    return r;
}

}  // namespace

CompanionSystem build_companion(const SuccessorFunction& tau) {
    BigInt c_big = period_constant(tau);
    if (c_big > kMaxCompanionPeriod)
        throw Error("companion period C = " + c_big.str() +
                    " exceeds the supported maximum " +
                    std::to_string(kMaxCompanionPeriod));
    const std::size_t C = static_cast<std::size_t>(c_big);
    const std::size_t dim = 2 * C;
    const RecursionCoefficients rc = standard_coefficients();

    // d_rows[j] / t_rows[j] express d[j] / t[j] over the block-0 entries,
    // for j = 1 .. 2C. Block-0 indices are the basis itself: in v(0) the
    // entry d[j] sits at position C - j, t[j] at 2C - j.
    std::vector<Row> d_rows(dim + 1), t_rows(dim + 1);
    for (std::size_t j = 1; j <= C; ++j) {
        d_rows[j] = unit_row(dim, C - j);
        t_rows[j] = unit_row(dim, 2 * C - j);
    }
    const Row zero(dim, BigInt(0));
    for (std::size_t m = C + 1; m <= 2 * C; ++m) {
        auto pre = tau.tau_preimage(static_cast<std::int64_t>(m));
        // any preimage p satisfies m - p = tau(p) - p, a divisor of C, so
        // p >= m - C >= 1 and the row for t[p] already exists
        const Row* tp = &zero;
        if (pre) {
            if (*pre < static_cast<std::int64_t>(m) - static_cast<std::int64_t>(C) ||
                *pre >= static_cast<std::int64_t>(m))
                throw std::logic_error("companion: preimage outside the block window");
            tp = &t_rows[static_cast<std::size_t>(*pre)];
        }
        d_rows[m] = combine(d_rows[m - 1], rc.d_from_d, *tp, rc.d_from_t);
        t_rows[m] = combine(d_rows[m - 1], rc.t_from_d, *tp, rc.t_from_t);
    }

    CompanionSystem sys;
    sys.C = C;
    sys.tau = tau;
    sys.M = IntegerMatrix(dim, dim);
    for (std::size_t r = 0; r < C; ++r)
        for (std::size_t col = 0; col < dim; ++col)
            sys.M.at(r, col) = d_rows[2 * C - r][col];
    for (std::size_t r = C; r < dim; ++r)
        for (std::size_t col = 0; col < dim; ++col)
            sys.M.at(r, col) = t_rows[3 * C - r][col];

    // build-time guard: evolve the seed block against the direct recursion
    DegreeTrace trace = run_recursion(tau, 4 * C);
    std::vector<BigInt> v = block_vector(trace, 0, C);
    for (std::size_t b = 1; b <= 3; ++b) {
        v = sys.M.apply(v);
        if (v != block_vector(trace, b, C))
            throw std::logic_error(
                "companion matrix disagrees with the recursion it unrolls");
    }
    return sys;
}

RadiusEstimate dynamical_degree(const SuccessorFunction& tau,
                                const BigRational& tol) {
    CompanionSystem sys = build_companion(tau);
    return dominant_modulus(char_poly(sys.M), tol);
}

DynamicalDegreeReport dynamical_degree_report(const SuccessorFunction& tau,
                                              const BigRational& tol) {
    constexpr double kEmpiricalAgreementTol = 1e-6;

    CompanionSystem sys = build_companion(tau);
    DynamicalDegreeReport rep;
    rep.C = BigInt(sys.C);
    rep.spectral = dominant_modulus(char_poly(sys.M), tol);

    const std::size_t m = 30 * sys.C;
    DegreeTrace trace = run_recursion(tau, m + sys.C);
    rep.realizability_violation = check_realizability(trace);
    if (trace.d2[m] > 0 && trace.d2[m + sys.C] > 0) {
        double ratio = to_double(BigRational(trace.d2[m + sys.C], trace.d2[m]));
        rep.empirical = std::pow(ratio, 1.0 / static_cast<double>(sys.C));
        double mid = to_double((rep.spectral.lower + rep.spectral.upper) / 2);
        rep.agree = std::abs(*rep.empirical - mid) <= kEmpiricalAgreementTol;
    }
    return rep;
}

}  // namespace cremona
