#include <doctest.h>

#include "cremona/companion.hpp"
#include "cremona/recursion.hpp"
#include "cremona/successor.hpp"

using namespace cremona;

namespace {

std::vector<BigInt> ints(std::vector<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("tau-spec parsing") {
    auto t = SuccessorFunction::parse("N=1; tau: 1->3");
    CHECK(t.period == 1);
    REQUIRE(t.successors.size() == 1);
    CHECK(t.successors[0] == 3);

    auto u = SuccessorFunction::parse("N=2; tau: 1->4, 2->inf");
    CHECK(u.period == 2);
    CHECK(u.successors[0] == 4);
    CHECK_FALSE(u.successors[1].has_value());

    // whitespace-insensitive, order-free
    auto w = SuccessorFunction::parse("  N = 2 ;\ttau :\n 2 -> inf ,1->4 ");
    CHECK(w == u);
    CHECK(SuccessorFunction::parse(u.to_spec()) == u);

    CHECK_THROWS_AS(SuccessorFunction::parse(""), ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=1; tau:"), ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=2; tau: 1->4, 1->5"),
                    ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=1; tau: 2->4"), ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=1; tau: 1->3 extra"),
                    ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=0; tau:"), ParseError);
    CHECK_THROWS_AS(SuccessorFunction::parse("N=1; tau: 1->oo"), ParseError);

    try {
        SuccessorFunction::parse("N=1; tau: 1=>3");
    } catch (const ParseError& e) {
        CHECK(e.position() == 11);  // points at the '='
    }
}

TEST_CASE("successor validation") {
    CHECK(SuccessorFunction::parse("N=1; tau: 1->3").validate().empty());
    CHECK(SuccessorFunction::parse("N=2; tau: 1->4, 2->inf").validate().empty());
    CHECK(SuccessorFunction::parse("N=2; tau: 1->4, 2->5").validate().empty());

    auto low = SuccessorFunction::parse("N=1; tau: 1->2").validate();
    REQUIRE(low.size() == 1);
    CHECK(low[0].find(">= k + 2") != std::string::npos);

    // residues 3 and 5 collide mod 2: the extension cannot be injective
    auto clash = SuccessorFunction::parse("N=2; tau: 1->3, 2->5").validate();
    REQUIRE(clash.size() == 1);
    CHECK(clash[0].find("injective") != std::string::npos);

    SuccessorFunction broken;
    broken.period = 2;
    broken.successors = {std::nullopt};
    CHECK_FALSE(broken.validate().empty());
}

TEST_CASE("tau extension and preimages") {
    auto t = SuccessorFunction::parse("N=1; tau: 1->3");
    CHECK(t.tau_at(1) == 3);
    CHECK(t.tau_at(5) == 7);
    CHECK(t.tau_preimage(1) == std::nullopt);
    CHECK(t.tau_preimage(2) == std::nullopt);
    CHECK(t.tau_preimage(3) == 1);
    CHECK(t.tau_preimage(47) == 45);
    CHECK_THROWS_AS(t.tau_at(0), Error);
    CHECK_THROWS_AS(t.tau_preimage(0), Error);

    auto u = SuccessorFunction::parse("N=2; tau: 1->4, 2->inf");
    CHECK(u.tau_at(1) == 4);
    CHECK(u.tau_at(2) == std::nullopt);
    CHECK(u.tau_at(3) == 6);
    CHECK(u.tau_at(4) == std::nullopt);
    CHECK(u.tau_preimage(4) == 1);
    CHECK(u.tau_preimage(5) == std::nullopt);
    CHECK(u.tau_preimage(6) == 3);
}

TEST_CASE("recursion traces match hand oracles") {
    auto inf = SuccessorFunction::parse("N=1; tau: 1->inf");
    DegreeTrace a = run_recursion(inf, 5);
    CHECK(a.d2 == ints({3, 6, 12, 24, 48, 96}));
    CHECK(a.t2 == ints({0, 3, 6, 12, 24, 48}));
    CHECK(check_equality(a));
    CHECK_FALSE(check_realizability(a).has_value());

    auto t3 = SuccessorFunction::parse("N=1; tau: 1->3");
    DegreeTrace b = run_recursion(t3, 8);
    CHECK(b.d2 == ints({3, 6, 12, 15, 12, 6, 3, 6, 12}));
    CHECK(b.t2 == ints({0, 3, 6, 6, 3, 0, 0, 3, 6}));
    CHECK(check_equality(b));

    DegreeTrace c = run_recursion(t3, 0);
    CHECK(c.d1 == ints({3}));
    CHECK(c.d2 == ints({3}));
    CHECK(c.t1 == ints({0}));
    CHECK(c.t2 == ints({0}));

    CHECK_FALSE(check_realizability(run_recursion(t3, 60)).has_value());

    CHECK_THROWS_AS(run_recursion(SuccessorFunction::parse("N=1; tau: 1->2"), 3),
                    Error);
}

TEST_CASE("corrupted traces are detected") {
    auto t3 = SuccessorFunction::parse("N=1; tau: 1->3");
    DegreeTrace b = run_recursion(t3, 8);
    b.d1[3] += 1;
    CHECK_FALSE(check_equality(b));

    DegreeTrace c = run_recursion(t3, 8);
    c.d1[3] = 0;
    auto idx = check_realizability(c);
    REQUIRE(idx.has_value());
    CHECK(*idx == 3);
    c.t2[2] = -1;
    CHECK(*check_realizability(c) == 2);
}

TEST_CASE("growth classification") {
    const BigRational tol(1, 1000000000);

    auto inf = SuccessorFunction::parse("N=1; tau: 1->inf");
    GrowthClass g = classify_growth(run_recursion(inf, 12), inf, tol);
    CHECK(g.kind == GrowthClass::Kind::Exponential);
    REQUIRE(g.rate.has_value());
    CHECK(g.rate->lower <= 2);
    CHECK(g.rate->upper >= 2);
    CHECK(g.rate->width() <= tol);

    auto t3 = SuccessorFunction::parse("N=1; tau: 1->3");
    CHECK(classify_growth(run_recursion(t3, 20), t3, tol).kind ==
          GrowthClass::Kind::Bounded);

    auto t4 = SuccessorFunction::parse("N=1; tau: 1->4");
    GrowthClass p = classify_growth(run_recursion(t4, 30), t4, tol);
    CHECK(p.kind == GrowthClass::Kind::Polynomial);
    CHECK(p.degree == 2);

    // precondition: at least 4C steps (C = 3 here)
    CHECK_THROWS_AS(classify_growth(run_recursion(t4, 11), t4, tol), Error);
}
