#include <doctest.h>

#include <cmath>
#include <vector>

#include "cremona/matrix.hpp"
#include "cremona/numeric.hpp"
#include "cremona/polynomial.hpp"
#include "cremona/roots.hpp"

using namespace cremona;

namespace {

UnivariatePolynomial ipoly(std::vector<long> ascending) {
    std::vector<BigInt> c;
    for (long v : ascending) c.emplace_back(v);
    return UnivariatePolynomial::from_int_coefficients(c);
}

BigRational rat_pow(const BigRational& base, unsigned k) {
    BigRational r(1);
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

IntegerMatrix make_matrix(std::size_t n, std::vector<long> rows) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = rows[i * n + j];
    return m;
}

}  // namespace

TEST_CASE("lcm_all") {
    CHECK(lcm_all({BigInt(1), BigInt(2)}) == 2);
    CHECK(lcm_all({BigInt(4), BigInt(6)}) == 12);
    CHECK(lcm_all({BigInt(2), BigInt(3), BigInt(10)}) == 30);
    CHECK_THROWS_AS(lcm_all({}), Error);
    CHECK_THROWS_AS(lcm_all({BigInt(0)}), Error);
    CHECK_THROWS_AS(lcm_all({BigInt(2), BigInt(-3)}), Error);
}

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("1e-9") == BigRational(1, 1000000000));
    CHECK(parse_rational("0.25") == BigRational(1, 4));
    CHECK(parse_rational("-3.5e2") == BigRational(-350));
    CHECK(parse_rational("3/4") == BigRational(3, 4));
    CHECK(parse_rational("-3/6") == BigRational(-1, 2));
    CHECK(parse_rational("7") == BigRational(7));
    CHECK(parse_rational("2.5e-3") == BigRational(1, 400));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);

    CHECK(rational_to_string(BigRational(3, 4)) == "3/4");
    CHECK(rational_to_string(BigRational(-2)) == "-2");
    // lowest terms are maintained by the backend
    BigRational q(6, 4);
    CHECK(num(q) == 3);
    CHECK(den(q) == 2);
    CHECK(format_significant(1.6180339887498949, 12) == "1.61803398875");
}

TEST_CASE("integer roots and directed rational roots") {
    CHECK(kth_root_floor(BigInt(27), 3) == 3);
    CHECK(kth_root_floor(BigInt(26), 3) == 2);
    CHECK(kth_root_floor(BigInt(0), 5) == 0);
    SplitMix64 rng(7);
    for (int t = 0; t < 50; ++t) {
        BigRational v(rng.next_in(0, 1 << 20), rng.next_in(1, 999));
        unsigned k = static_cast<unsigned>(rng.next_in(1, 6));
        BigRational lo = kth_root_lower(v, k, 64);
        BigRational hi = kth_root_upper(v, k, 64);
        CHECK(lo <= hi);
        CHECK(rat_pow(lo, k) <= v);
        CHECK(rat_pow(hi, k) >= v);
        CHECK(hi - lo <= BigRational(1, BigInt(1) << 62));
    }
}

TEST_CASE("char_poly on pinned matrices") {
    CHECK(char_poly(make_matrix(2, {2, 1, 1, 1})) == ipoly({1, -3, 1}));
    // the reflection pullback matrix; reappears in the intersection module
    CHECK(char_poly(make_matrix(3, {2, 1, 0, -3, -2, 0, -1, -1, 1})) ==
          ipoly({1, -1, -1, 1}));
    CHECK(char_poly(IntegerMatrix::identity(4)) == ipoly({1, -4, 6, -4, 1}));
    CHECK_THROWS_AS(char_poly(IntegerMatrix(2, 3)), Error);
}

TEST_CASE("char_poly routes agree and Cayley-Hamilton holds") {
    SplitMix64 rng(11);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = static_cast<std::size_t>(rng.next_in(1, t < 25 ? 6 : 8));
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.at(i, j) = rng.next_in(-9, 9);

        UnivariatePolynomial p = char_poly(m);
        CHECK(p == char_poly_interpolated(m));
        CHECK(p.degree() == static_cast<int>(n));
        CHECK(p.leading() == 1);

        // determinant cross-check: p(0) = det(-m) = (-1)^n det(m)
        BigInt det = bareiss_determinant(m);
        CHECK(BigRational((n % 2 == 0) ? det : BigInt(-det)) == p.coeff(0));

        // Cayley-Hamilton with exact matrix arithmetic
        auto c = p.primitive_integer_coefficients();
        IntegerMatrix acc(n, n);
        IntegerMatrix power = IntegerMatrix::identity(n);
        for (std::size_t i = 0; i < c.size(); ++i) {
            acc = acc + power.scaled(c[i]);
            if (i + 1 < c.size()) power = power * m;
        }
        CHECK(acc == IntegerMatrix(n, n));
    }
}

TEST_CASE("bareiss determinant basics") {
    CHECK(bareiss_determinant(make_matrix(2, {1, 2, 3, 4})) == -2);
    CHECK(bareiss_determinant(make_matrix(2, {1, 2, 2, 4})) == 0);
    CHECK(bareiss_determinant(make_matrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) ==
          -1);
    CHECK(bareiss_determinant(IntegerMatrix::identity(5)) == 1);
}

TEST_CASE("polynomial arithmetic") {
    UnivariatePolynomial a = ipoly({-1, 0, 0, 1});  // x^3 - 1
    UnivariatePolynomial b = ipoly({-1, 1});        // x - 1
    auto [q, r] = a.divmod(b);
    CHECK(q == ipoly({1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(a.evaluate(BigRational(2)) == 7);
    CHECK(a.derivative() == ipoly({0, 0, 3}));
    CHECK((b * b) == ipoly({1, -2, 1}));
    CHECK(UnivariatePolynomial::gcd(ipoly({-2, 1}) * b, ipoly({3, 1}) * b) ==
          ipoly({-1, 1}));
    CHECK(ipoly({1, -2, 1}).squarefree_part() == ipoly({-1, 1}));
    // (x-1)^2 (x+1) has squarefree part x^2 - 1
    UnivariatePolynomial p = ipoly({1, -2, 1}) * ipoly({1, 1});
    CHECK(p.squarefree_part() == ipoly({-1, 0, 1}));
    CHECK(p.multiplicity_of_root(BigRational(1)) == 2);
    CHECK(p.multiplicity_of_root(BigRational(-1)) == 1);
    CHECK(p.multiplicity_of_root(BigRational(5)) == 0);

    UnivariatePolynomial h(std::vector<BigRational>{
        BigRational(-3, 2), BigRational(0), BigRational(1, 2)});
    CHECK(h.primitive_integer_coefficients() ==
          std::vector<BigInt>{BigInt(-3), BigInt(0), BigInt(1)});
    UnivariatePolynomial neg = ipoly({2, -1});
    CHECK(neg.primitive_integer_coefficients() ==
          std::vector<BigInt>{BigInt(-2), BigInt(1)});

    CHECK(ipoly({1, -3, 1}).to_string() == "x^2 - 3*x + 1");
    CHECK(UnivariatePolynomial().to_string() == "0");
    CHECK(ipoly({0, 2}).to_string() == "2*x");
}

TEST_CASE("lagrange interpolation") {
    std::vector<BigRational> xs{BigRational(0), BigRational(1), BigRational(2)};
    std::vector<BigRational> ys{BigRational(-2), BigRational(-1), BigRational(2)};
    CHECK(lagrange_interpolate(xs, ys) == ipoly({-2, 0, 1}));
}

TEST_CASE("minimal_recurrence recovers pinned recurrences") {
    auto seq = [](std::vector<long> v) {
        std::vector<BigInt> s;
        for (long x : v) s.emplace_back(x);
        return s;
    };
    CHECK(minimal_recurrence(seq({3, 6, 12, 24, 48, 96})) == ipoly({-2, 1}));
    CHECK(minimal_recurrence(seq({1, 1, 2, 3, 5, 8, 13})) == ipoly({-1, -1, 1}));
    // eventually periodic with period 6, minimal polynomial (x-1)(x^2-x+1)
    CHECK(minimal_recurrence(seq({3, 6, 12, 15, 12, 6, 3, 6, 12, 15, 12, 6, 3,
                                  6, 12, 15, 12, 6})) == ipoly({-1, 2, -2, 1}));
    // squares grow like (x-1)^3
    CHECK(minimal_recurrence(seq({0, 1, 4, 9, 16, 25, 36, 49})) ==
          ipoly({-1, 3, -3, 1}));
    // transient then doubling: x (x - 2)
    CHECK(minimal_recurrence(seq({5, 1, 2, 4, 8, 16, 32, 64})) ==
          ipoly({0, -2, 1}));
    CHECK(minimal_recurrence(seq({0, 0, 0, 0})).degree() == 0);

    // property: the recurrence annihilates every window of a random
    // linearly-recurrent sequence
    SplitMix64 rng(23);
    for (int t = 0; t < 20; ++t) {
        std::size_t order = static_cast<std::size_t>(rng.next_in(1, 4));
        std::vector<BigInt> rec, s;
        for (std::size_t i = 0; i < order; ++i) rec.emplace_back(rng.next_in(-3, 3));
        for (std::size_t i = 0; i < order; ++i) s.emplace_back(rng.next_in(-5, 5));
        for (std::size_t i = order; i < 2 * order + 6; ++i) {
            BigInt v = 0;
            for (std::size_t j = 0; j < order; ++j) v += rec[j] * s[i - 1 - j];
            s.push_back(v);
        }
        UnivariatePolynomial mu = minimal_recurrence(s);
        REQUIRE(mu.degree() >= 0);
        std::size_t L = static_cast<std::size_t>(mu.degree());
        REQUIRE(L <= order);
        for (std::size_t m = 0; m + L < s.size(); ++m) {
            BigRational acc(0);
            for (std::size_t i = 0; i <= L; ++i)
                acc += mu.coeff(i) * BigRational(s[m + i]);
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("sturm counting on pinned inputs") {
    CHECK(count_real_roots(ipoly({-2, 0, 1}), BigRational(0), BigRational(2)) ==
          1);
    CHECK(count_real_roots(ipoly({1, 0, 1}), BigRational(-10), BigRational(10)) ==
          0);
    // (x-1)^2 (x+1): two distinct roots
    UnivariatePolynomial p = ipoly({1, -2, 1}) * ipoly({1, 1});
    CHECK(count_real_roots(p, BigRational(-2), BigRational(2)) == 2);
    // closed-interval semantics: root exactly at lo
    CHECK(count_real_roots(ipoly({-1, 1}), BigRational(1), BigRational(5)) == 1);
    CHECK_THROWS_AS(count_real_roots(UnivariatePolynomial(), BigRational(0),
                                     BigRational(1)),
                    Error);
}

TEST_CASE("sturm isolation") {
    auto roots = sturm_real_roots(ipoly({-2, 0, 1}), BigRational(0), BigRational(2));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo >= 0);
    CHECK(roots[0].lo * roots[0].lo <= 2);
    CHECK(roots[0].hi * roots[0].hi >= 2);

    UnivariatePolynomial p = ipoly({1, -2, 1}) * ipoly({1, 1});
    auto both = sturm_real_roots(p, BigRational(-2), BigRational(2));
    REQUIRE(both.size() == 2);
    CHECK(both[0].lo <= -1);
    CHECK(both[0].hi >= -1);
    CHECK(both[1].lo <= 1);
    CHECK(both[1].hi >= 1);
    CHECK(both[0].hi < both[1].lo);  // strictly separated

    // exact rational roots degenerate to points
    auto exact = sturm_real_roots(ipoly({-6, 11, -6, 1}),  // (x-1)(x-2)(x-3)
                                  BigRational(1), BigRational(3));
    REQUIRE(exact.size() == 3);
    CHECK(exact[0].lo == exact[0].hi);
    CHECK(exact[0].lo == 1);
    CHECK(exact[2].hi == 3);
}

TEST_CASE("sturm count matches subdivision oracle") {
    SplitMix64 rng(101);
    for (int t = 0; t < 40; ++t) {
        int deg = static_cast<int>(rng.next_in(1, 6));
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = rng.next_in(-9, 9);
        if (c.back() == 0) c.back() = 1;
        UnivariatePolynomial p = UnivariatePolynomial::from_int_coefficients(c);

        // independent oracle: own squarefree reduction (plain Euclid), then
        // fine subdivision counting sign changes and exact grid roots
        UnivariatePolynomial a = p, b = p.derivative();
        while (!b.is_zero()) {
            auto rem = a.divmod(b).second;
            a = b;
            b = rem;
        }
        UnivariatePolynomial sf = p.divmod(a).first;

        double bound = 1.0;
        for (int i = 0; i < deg; ++i)
            bound = std::max(bound,
                             std::abs(to_double(BigRational(c[static_cast<std::size_t>(i)])) /
                                      to_double(BigRational(c.back()))));
        BigInt ib = BigInt(static_cast<long>(bound)) + 2;
        const int cells = 1 << 13;
        BigRational lo(-ib), width(2 * ib, cells);
        int oracle = 0;
        int prev_sign = 0;
        for (int i = 0; i <= cells; ++i) {
            BigRational x = lo + width * i;
            int s = sign(sf.evaluate(x));
            if (s == 0) {
                ++oracle;
                prev_sign = 0;  // the flip around this root is already counted
            } else {
                if (prev_sign != 0 && s != prev_sign) ++oracle;
                prev_sign = s;
            }
        }
        CHECK(count_real_roots(p, BigRational(-ib), BigRational(ib)) == oracle);
    }
}

TEST_CASE("unit disk decision") {
    CHECK(all_roots_in_closed_unit_disk(ipoly({-1, 0, 0, 1})));   // x^3 - 1
    CHECK(all_roots_in_closed_unit_disk(ipoly({1, -1, -1, 1})));  // (x-1)^2(x+1) via coeffs 1 -1 -1 1
    CHECK_FALSE(all_roots_in_closed_unit_disk(ipoly({-2, 1})));
    CHECK_FALSE(all_roots_in_closed_unit_disk(ipoly({-1, -1, 1})));
    // x (x-1) (x^2-x+1): zero roots and sixth roots of unity
    UnivariatePolynomial p =
        ipoly({0, 1}) * ipoly({-1, 1}) * ipoly({1, -1, 1});
    CHECK(all_roots_in_closed_unit_disk(p));
    CHECK_THROWS_AS(all_roots_in_closed_unit_disk(ipoly({-1, 2})), Error);
}

TEST_CASE("graeffe step squares roots") {
    // (x-2)(x-3) -> (x-4)(x-9)
    auto out = graeffe_step({BigInt(6), BigInt(-5), BigInt(1)});
    CHECK(out == std::vector<BigInt>{BigInt(36), BigInt(-13), BigInt(1)});
}

TEST_CASE("dominant modulus: pinned values") {
    const BigRational tol(1, 1000000000);

    // golden ratio
    auto r = dominant_modulus(ipoly({-1, -1, 1}), tol);
    CHECK(r.lower <= r.upper);
    CHECK(r.width() <= tol);
    // contains (1+sqrt5)/2: lower <= phi iff (2 lower - 1)^2 <= 5 (lower >= 1/2)
    BigRational tl = 2 * r.lower - 1, tu = 2 * r.upper - 1;
    CHECK(tl > 0);
    CHECK(tl * tl <= 5);
    CHECK(tu * tu >= 5);

    auto exact2 = dominant_modulus(ipoly({-2, 1}), tol);
    CHECK(exact2.lower == 2);
    CHECK(exact2.upper == 2);

    auto unit = dominant_modulus(ipoly({1, -1, -1, 1}), tol);
    CHECK(unit.lower == 1);
    CHECK(unit.upper == 1);
    CHECK(unit.method == RadiusMethod::Graeffe);

    // only root zero
    auto z = dominant_modulus(ipoly({0, 0, 0, 1}), tol);
    CHECK(z.lower == 0);
    CHECK(z.upper == 0);

    // tribonacci: real dominant, complex pair below
    auto trib = dominant_modulus(ipoly({-1, -1, -1, 1}), tol);
    CHECK(trib.width() <= tol);
    double mid = to_double((trib.lower + trib.upper) / 2);
    CHECK(std::abs(mid - 1.8392867552141612) < 2e-9);

    // complex pair: sqrt(2)
    auto c2 = dominant_modulus(ipoly({2, 0, 1}), tol);
    CHECK(c2.width() <= tol);
    CHECK(c2.lower * c2.lower <= 2);
    CHECK(c2.upper * c2.upper >= 2);

    // all-complex quartic through the modulus-squared resultant
    auto c4 = dominant_modulus(ipoly({2, 0, 1}) * ipoly({1, 1, 1}), tol);
    CHECK(c4.width() <= tol);
    CHECK(c4.lower * c4.lower <= 2);
    CHECK(c4.upper * c4.upper >= 2);

    CHECK_THROWS_AS(dominant_modulus(UnivariatePolynomial(), tol), Error);
    CHECK_THROWS_AS(dominant_modulus(ipoly({5}), tol), Error);
    CHECK_THROWS_AS(dominant_modulus(ipoly({-1, 1}), BigRational(0)), Error);
}

TEST_CASE("dominant modulus: random integer-root products") {
    const BigRational tol(1, 1000000000);
    SplitMix64 rng(31);
    for (int t = 0; t < 25; ++t) {
        int nroots = static_cast<int>(rng.next_in(1, 10));
        UnivariatePolynomial p = ipoly({1});
        BigInt maxmod = 0;
        for (int i = 0; i < nroots; ++i) {
            long root = rng.next_in(-9, 9);
            p = p * ipoly({-root, 1});
            maxmod = std::max(maxmod, abs(BigInt(root)));
        }
        auto r = dominant_modulus(p, tol);
        CHECK(r.width() <= tol);
        CHECK(r.lower <= BigRational(maxmod));
        CHECK(r.upper >= BigRational(maxmod));
        CHECK(r.lower >= 0);
    }
}

TEST_CASE("dominant modulus: mixed quadratic factors stay certified") {
    const BigRational tol(1, 1000000000);
    SplitMix64 rng(37);
    for (int t = 0; t < 15; ++t) {
        // product of linear factors and one irreducible quadratic x^2 + q
        UnivariatePolynomial p = ipoly({1});
        BigRational max_sq(0);  // max |root|^2, exact
        int lin = static_cast<int>(rng.next_in(0, 3));
        for (int i = 0; i < lin; ++i) {
            long root = rng.next_in(-6, 6);
            p = p * ipoly({-root, 1});
            max_sq = std::max(max_sq, BigRational(root * root));
        }
        long qc = rng.next_in(2, 30);
        p = p * ipoly({qc, 0, 1});
        max_sq = std::max(max_sq, BigRational(qc));
        auto r = dominant_modulus(p, tol);
        CHECK(r.width() <= tol);
        CHECK(r.lower * r.lower <= max_sq);
        CHECK(r.upper * r.upper >= max_sq);
    }
}

TEST_CASE("dominant modulus: budget exhaustion is reported, not truncated") {
    const BigRational tol(1, 1000000000);
    // ten complex roots, no real ones, degree beyond the exact-resultant
    // route: the Graeffe sandwich cannot certify 1e-9 within budget
    UnivariatePolynomial p = ipoly({2, 0, 1}) * ipoly({3, 0, 1}) *
                             ipoly({5, 0, 1}) * ipoly({7, 0, 1}) *
                             ipoly({11, 0, 1});
    try {
        dominant_modulus(p, tol);
        FAIL("expected ToleranceError");
    } catch (const ToleranceError& e) {
        BigRational lo = parse_rational(e.best_lower());
        BigRational hi = parse_rational(e.best_upper());
        CHECK(lo >= 0);
        CHECK(lo <= hi);
        CHECK(lo * lo <= 11);  // true radius sqrt(11) inside the interval
        CHECK(hi * hi >= 11);
    }
}
