#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

// Exact arithmetic base types. GMP-backed; value semantics throughout.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

inline BigInt num(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}
inline BigInt den(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

inline BigInt abs(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }
inline BigRational abs(const BigRational& a) {
    return a < 0 ? BigRational(-a) : a;
}

inline int sign(const BigInt& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline int sign(const BigRational& a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }

/// lcm of a nonempty list of positive integers.
BigInt lcm_all(const std::vector<BigInt>& values);

/// floor(a / b) for b > 0 (round toward -infinity, unlike C++ division).
BigInt floor_div(const BigInt& a, const BigInt& b);

/// floor and ceil of a rational, as integers.
BigInt rational_floor(const BigRational& q);
BigInt rational_ceil(const BigRational& q);

/// floor(value^(1/k)) for value >= 0, k >= 1.
BigInt kth_root_floor(const BigInt& value, unsigned k);

/// Dyadic bracketing of value^(1/k) for value >= 0: the lower bound satisfies
/// r^k <= value, the upper r^k >= value, both with denominator 2^scale_bits.
BigRational kth_root_lower(const BigRational& value, unsigned k,
                           unsigned scale_bits);
BigRational kth_root_upper(const BigRational& value, unsigned k,
                           unsigned scale_bits);

/// Exact rational from a literal: "-3", "0.25", "1e-9", "2.5e-3", "3/4".
/// Throws ParseError on malformed input.
BigRational parse_rational(const std::string& text);

/// "p/q" in lowest terms, or just "p" for integers.
std::string rational_to_string(const BigRational& q);

/// Round-trip double formatting with a fixed significant-digit count.
std::string format_significant(double x, int digits = 12);

double to_double(const BigRational& q);

/// Deterministic 64-bit generator (splitmix64). Used wherever tests or the
/// CLI need seeded randomness; never std::rand, never nondeterministic.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [lo, hi], inclusive. Requires lo <= hi.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::uint64_t state_;
};

}  // namespace cremona
