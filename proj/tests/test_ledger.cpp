#include <doctest.h>

#include <numeric>

#include "cremona/ledger.hpp"
#include "cremona/numeric.hpp"

using namespace cremona;

TEST_CASE("cubic fourfold middle Hodge number from the monomial count") {
    // 20 squarefree cubic monomials in six variables plus the square of the
    // hyperplane class
    CHECK(cubic_fourfold_h22() == 21);
}

TEST_CASE("ledger presets satisfy the signature formula") {
    SignatureLedger cubic = new_ledger(LedgerPreset::CubicFourfold);
    CHECK(cubic.profile == HodgeProfile{1, 21});
    CHECK(cubic.n_plus == 21);
    CHECK(cubic.n_minus == 0);
    CHECK(check_formula(cubic));
    CHECK(cubic.history.empty());

    SignatureLedger p4 = new_ledger(LedgerPreset::P4);
    CHECK(p4.profile == HodgeProfile{1, 1});
    CHECK(p4.n_plus == 1);
    CHECK(p4.n_minus == 0);
    CHECK(check_formula(p4));

    SignatureLedger custom = new_ledger_custom(2, 2);
    CHECK(custom.n_plus == 1);
    CHECK(custom.n_minus == 1);
    CHECK(check_formula(custom));

    CHECK_THROWS_AS(new_ledger_custom(-1, 5), Error);
    CHECK_THROWS_AS(new_ledger_custom(0, 1), Error);  // odd count split
    CHECK_THROWS_AS(new_ledger_custom(5, 2), Error);  // negative n_plus
}

TEST_CASE("blow-up deltas per center kind") {
    SignatureLedger cubic = new_ledger(LedgerPreset::CubicFourfold);

    SignatureLedger pt = apply_blowup(cubic, BlowupEvent::point());
    CHECK(pt.profile == HodgeProfile{2, 22});
    CHECK(pt.n_plus == 21);
    CHECK(pt.n_minus == 1);
    CHECK(check_formula(pt));
    REQUIRE(pt.history.size() == 1);
    CHECK(pt.history[0].added.size() == 1);
    CHECK(pt.history[0].added[0].sign == -1);
    CHECK(pt.history[0].added[0].hyperplane_power == 2);

    SignatureLedger cv = apply_blowup(cubic, BlowupEvent::curve());
    CHECK(cv.profile == HodgeProfile{2, 23});
    CHECK(cv.n_plus == 22);
    CHECK(cv.n_minus == 1);
    CHECK(check_formula(cv));
    CHECK(cv.history[0].added.size() == 2);

    SignatureLedger sf = apply_blowup(cubic, BlowupEvent::surface(7));
    CHECK(sf.profile == HodgeProfile{2, 28});
    CHECK(sf.n_plus == 27);
    CHECK(sf.n_minus == 1);
    CHECK(check_formula(sf));
    CHECK(sf.history[0].added.size() == 7);
    // exactly one negative class per event of any kind
    int negatives = 0;
    for (const auto& cls : sf.history[0].added)
        if (cls.sign == -1) ++negatives;
    CHECK(negatives == 1);

    // the original ledger is untouched
    CHECK(cubic.n_minus == 0);
    CHECK(cubic.history.empty());

    CHECK_THROWS_AS(BlowupEvent::surface(0), Error);
}

TEST_CASE("event folds compose and stay consistent on random sequences") {
    SplitMix64 rng(20260825);
    for (int run = 0; run < 50; ++run) {
        SignatureLedger l;
        switch (rng.next_in(0, 2)) {
            case 0: l = new_ledger(LedgerPreset::CubicFourfold); break;
            case 1: l = new_ledger(LedgerPreset::P4); break;
            default: l = new_ledger_custom(2, 2); break;
        }
        std::int64_t rank = l.profile.h22;
        for (int step = 0; step < 50; ++step) {
            BlowupEvent e;
            switch (rng.next_in(0, 2)) {
                case 0: e = BlowupEvent::point(); break;
                case 1: e = BlowupEvent::curve(); break;
                default:
                    e = BlowupEvent::surface(rng.next_in(1, 9));
                    break;
            }
            std::int64_t prev_minus = l.n_minus;
            rank += e.rank_delta();
            l = apply_blowup(l, e);
            CHECK(check_formula(l));
            CHECK(l.profile.h22 == rank);
            CHECK(l.n_minus == prev_minus + 1);
            CHECK(l.n_plus + l.n_minus == l.profile.h22);
            CHECK(l.history.size() == static_cast<std::size_t>(step + 1));
        }
    }
}

TEST_CASE("corrupted counts fail the formula check") {
    SignatureLedger l = apply_blowup(new_ledger(LedgerPreset::CubicFourfold),
                                     BlowupEvent::curve());
    REQUIRE(check_formula(l));
    SignatureLedger bad = l;
    bad.n_plus += 1;
    CHECK(!check_formula(bad));
    SignatureLedger bad2 = l;
    bad2.profile.h22 -= 1;
    CHECK(!check_formula(bad2));
}

TEST_CASE("applying events one by one equals applying the whole list") {
    std::vector<BlowupEvent> events = {
        BlowupEvent::point(), BlowupEvent::surface(3), BlowupEvent::curve(),
        BlowupEvent::curve(), BlowupEvent::surface(1)};
    SignatureLedger a = new_ledger(LedgerPreset::CubicFourfold);
    for (const auto& e : events) a = apply_blowup(a, e);

    SignatureLedger b = new_ledger(LedgerPreset::CubicFourfold);
    SignatureLedger mid = b;
    for (std::size_t i = 0; i < 2; ++i) mid = apply_blowup(mid, events[i]);
    for (std::size_t i = 2; i < events.size(); ++i)
        mid = apply_blowup(mid, events[i]);
    CHECK(a == mid);
}

TEST_CASE("event script parsing") {
    LedgerScript s = parse_event_script(
        "start cubic\npoint\ncurve\nsurface 4\n\npoint\n");
    CHECK(s.initial.profile == HodgeProfile{1, 21});
    REQUIRE(s.events.size() == 4);
    CHECK(s.events[2] == BlowupEvent::surface(4));

    LedgerScript c = parse_event_script("start custom 2 2");
    CHECK(c.initial.n_minus == 1);
    CHECK(parse_event_script("  start p4  ").initial.profile ==
          HodgeProfile{1, 1});

    CHECK_THROWS_AS(parse_event_script(""), ParseError);
    CHECK_THROWS_AS(parse_event_script("point\n"), ParseError);
    CHECK_THROWS_AS(parse_event_script("start cubic\nsurface 0\n"), ParseError);
    CHECK_THROWS_AS(parse_event_script("start cubic\nsurface\n"), ParseError);
    CHECK_THROWS_AS(parse_event_script("start cubic\nblow up\n"), ParseError);
    CHECK_THROWS_AS(parse_event_script("start custom 2\n"), ParseError);
    CHECK_THROWS_AS(parse_event_script("start moon\n"), ParseError);

    // reported offsets point at the offending line
    try {
        parse_event_script("start cubic\nsurface 0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
    }
}
