#include <doctest.h>

#include <string>

#include "cremona/errors.hpp"
#include "cremona/reports.hpp"

using namespace cremona;

namespace {
const BigRational kTol(1, 1000000000);
}

TEST_CASE("reflect report for the doubling spec") {
    ReflectReport r = build_reflect_report("N=1; tau: 1->inf", 10, kTol, 7);
    CHECK(r.tau == "N=1; tau: 1->inf");
    CHECK(r.period_constant == "1");
    REQUIRE(r.d2.size() == 11);
    CHECK(r.d2[0] == "3");
    CHECK(r.d2[10] == "3072");
    CHECK(r.d1 == r.d2);
    CHECK(r.equality);
    CHECK(!r.realizability_violation.has_value());
    CHECK(r.spectral.midpoint == doctest::Approx(2.0).epsilon(1e-9));
    REQUIRE(r.empirical.has_value());
    CHECK(*r.empirical == doctest::Approx(2.0));
    CHECK(r.agree);
    CHECK(r.growth_kind == "exponential");
    REQUIRE(r.growth_rate.has_value());
    CHECK(!r.needs_attention());

    ReflectReport back = reflect_report_from_json(to_json_string(r));
    CHECK(back == r);

    std::string csv = to_csv(r);
    CHECK(csv.substr(0, 18) == "step,d1,d2,t1,t2\n0");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

TEST_CASE("reflect report for a bounded spec") {
    ReflectReport r = build_reflect_report("N=1; tau: 1->3", 30, kTol, 0);
    CHECK(r.period_constant == "2");
    CHECK(r.growth_kind == "bounded");
    CHECK(!r.growth_rate.has_value());
    CHECK(r.spectral.lower == "1");
    CHECK(r.spectral.upper == "1");
    CHECK(!r.agree);  // a bounded oscillation has no pointwise rate
    CHECK(reflect_report_from_json(to_json_string(r)) == r);

    // the growth class is certified even when the display trace is short
    ReflectReport tiny = build_reflect_report("N=1; tau: 1->3", 2, kTol, 0);
    CHECK(tiny.growth_kind == "bounded");
    CHECK(tiny.d2.size() == 3);
}

TEST_CASE("compose report") {
    ComposeReport r = build_compose_report(
        {"[y*z : x*z : x*y]", "[x + y : y + z : x + z]"}, 6, 4096, 3);
    CHECK(r.maps[0] == "[y*z : x*z : x*y]");
    CHECK(r.degrees == std::vector<std::int64_t>{1, 2, 1, 2, 1, 2, 1});
    CHECK(!r.capped);
    REQUIRE(r.submultiplicativity.size() == 1);
    CHECK(r.submultiplicativity[0].composite == 2);
    CHECK(r.submultiplicativity[0].product == 2);
    CHECK(r.submultiplicativity[0].holds);
    CHECK(compose_report_from_json(to_json_string(r)) == r);

    std::string csv = to_csv(r);
    CHECK(csv.rfind("iterate,degree\n0,1\n1,2\n", 0) == 0);

    ComposeReport capped = build_compose_report({"[y*z : x*z : x*y]"}, 3, 1, 1);
    CHECK(capped.capped);
    CHECK(capped.needs_attention());
    CHECK(capped.degrees == std::vector<std::int64_t>{1});

    CHECK_THROWS_AS(build_compose_report({}, 3, 4096, 0), Error);
    CHECK_THROWS_AS(build_compose_report({"[x : y : garbage^]"}, 3, 4096, 0),
                    ParseError);
}

TEST_CASE("scan report") {
    ScanReport r = build_scan_report("[s*x^2 + y*z : x*y : z^2]", "-1:1:5", 1,
                                     4096, 11);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.rows[0].s == "-1");
    CHECK(r.rows[1].s == "-1/2");
    CHECK(r.rows[2].s == "0");
    CHECK(r.rows[2].degenerate == false);
    CHECK(scan_report_from_json(to_json_string(r)) == r);
    CHECK(to_csv(r).rfind("s,degree,degenerate,capped\n-1,2,0,0\n", 0) == 0);
    CHECK(!r.needs_attention());
}

TEST_CASE("ledger report") {
    LedgerReport r = build_ledger_report("start cubic\npoint\ncurve\n", 5);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].event == "start");
    CHECK(r.rows[0].n_plus == 21);
    CHECK(r.rows[2].h22 == 24);
    CHECK(r.rows[2].n_minus == 2);
    CHECK(r.formula_ok);
    CHECK(!r.needs_attention());
    CHECK(ledger_report_from_json(to_json_string(r)) == r);

    CHECK(to_csv(r) ==
          "step,event,h11,h22,n_plus,n_minus\n"
          "0,start,1,21,21,0\n"
          "1,point,2,22,21,1\n"
          "2,curve,3,24,22,2\n");

    CHECK_THROWS_AS(build_ledger_report("start cubic\nsurface 0\n", 0),
                    ParseError);
}

TEST_CASE("emitters are deterministic") {
    auto once = build_compose_report({"[y*z : x*z : x*y]"}, 4, 4096, 9);
    auto twice = build_compose_report({"[y*z : x*z : x*y]"}, 4, 4096, 9);
    CHECK(to_json_string(once) == to_json_string(twice));
    CHECK(to_text(once) == to_text(twice));
    CHECK(to_csv(once) == to_csv(twice));
}
