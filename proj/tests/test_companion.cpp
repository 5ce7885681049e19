#include <doctest.h>

#include "cremona/companion.hpp"

using namespace cremona;

namespace {

IntegerMatrix from_rows(std::size_t n, std::vector<long> rows) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i * n + j];
    return m;
}

}  // namespace

TEST_CASE("period constant") {
    CHECK(period_constant(SuccessorFunction::parse("N=1; tau: 1->3")) == 2);
    CHECK(period_constant(SuccessorFunction::parse("N=1; tau: 1->inf")) == 1);
    CHECK(period_constant(SuccessorFunction::parse("N=2; tau: 1->4, 2->5")) ==
          6);
    // the infinite entry drops out of the lcm set, tau(1) - 1 = 3 stays
    CHECK(period_constant(SuccessorFunction::parse("N=2; tau: 1->4, 2->inf")) ==
          6);
    CHECK_THROWS_AS(period_constant(SuccessorFunction::parse("N=1; tau: 1->2")),
                    Error);
}

TEST_CASE("companion matrices on pinned systems") {
    auto inf = build_companion(SuccessorFunction::parse("N=1; tau: 1->inf"));
    CHECK(inf.C == 1);
    // with no preimage the t-feedback column is dead; the unrolled form
    // keeps it explicitly zero
    CHECK(inf.M == from_rows(2, {2, 0, 1, 0}));

    auto t3 = build_companion(SuccessorFunction::parse("N=1; tau: 1->3"));
    CHECK(t3.C == 2);
    CHECK(t3.M == from_rows(4, {4, 0, -3, -6,
                                2, 0, 0, -3,
                                2, 0, -2, -3,
                                1, 0, 0, -2}));
}

TEST_CASE("block evolution reproduces the recursion") {
    const std::vector<std::string> specs = {
        "N=1; tau: 1->inf",
        "N=1; tau: 1->3",
        "N=1; tau: 1->4",
        "N=2; tau: 1->4, 2->5",
        "N=2; tau: 1->4, 2->inf",
        "N=3; tau: 1->5, 2->inf, 3->7",
    };
    for (const auto& s : specs) {
        CAPTURE(s);
        auto tau = SuccessorFunction::parse(s);
        auto sys = build_companion(tau);
        DegreeTrace trace = run_recursion(tau, 10 * sys.C);
        std::vector<BigInt> v = block_vector(trace, 0, sys.C);
        for (std::size_t b = 1; b <= 9; ++b) {
            v = sys.M.apply(v);
            CHECK(v == block_vector(trace, b, sys.C));
        }
    }
}

TEST_CASE("dynamical degrees of the pinned systems") {
    const BigRational tol(1, 1000000000);

    auto two = dynamical_degree(SuccessorFunction::parse("N=1; tau: 1->inf"), tol);
    CHECK(two.width() <= tol);
    CHECK(two.lower <= 2);
    CHECK(two.upper >= 2);

    auto one = dynamical_degree(SuccessorFunction::parse("N=1; tau: 1->3"), tol);
    CHECK(one.lower == 1);
    CHECK(one.upper == 1);

    // polynomial growth still has spectral radius 1
    auto poly = dynamical_degree(SuccessorFunction::parse("N=1; tau: 1->4"), tol);
    CHECK(poly.lower == 1);
    CHECK(poly.upper == 1);
}

TEST_CASE("degree report includes the empirical cross-check") {
    const BigRational tol(1, 1000000000);

    auto rep = dynamical_degree_report(
        SuccessorFunction::parse("N=1; tau: 1->inf"), tol);
    CHECK(rep.C == 1);
    REQUIRE(rep.empirical.has_value());
    CHECK(*rep.empirical == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rep.agree);
    CHECK_FALSE(rep.realizability_violation.has_value());

    // bounded oscillation: the pointwise ratio says nothing, and the report
    // flags the disagreement instead of hiding it
    auto osc = dynamical_degree_report(
        SuccessorFunction::parse("N=1; tau: 1->3"), tol);
    CHECK(osc.C == 2);
    CHECK_FALSE(osc.agree);
    CHECK_FALSE(osc.realizability_violation.has_value());
}
