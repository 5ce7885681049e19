#include "cremona/numeric.hpp"

#include <gmp.h>

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace cremona {

BigInt lcm_all(const std::vector<BigInt>& values) {
    if (values.empty()) throw Error("lcm_all: empty list");
    BigInt acc = 1;
    for (const BigInt& v : values) {
        if (v <= 0) throw Error("lcm_all: nonpositive entry " + v.str());
        acc = boost::multiprecision::lcm(acc, v);
    }
    return acc;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b <= 0) throw Error("floor_div: divisor must be positive");
    BigInt q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

BigInt rational_floor(const BigRational& q) {
    return floor_div(num(q), den(q));
}

BigInt rational_ceil(const BigRational& q) {
    return -floor_div(-num(q), den(q));
}

BigInt kth_root_floor(const BigInt& value, unsigned k) {
    if (value < 0) throw Error("kth_root_floor: negative value");
    if (k == 0) throw Error("kth_root_floor: k must be >= 1");
    BigInt r;
    mpz_root(r.backend().data(), value.backend().data(), k);
    return r;
}

BigRational kth_root_lower(const BigRational& value, unsigned k,
                           unsigned scale_bits) {
    if (value < 0) throw Error("kth_root_lower: negative value");
    const BigInt scale = BigInt(1) << scale_bits;
    // m = floor((value * scale^k)^(1/k)) gives (m/scale)^k <= value.
    BigInt scaled = rational_floor(value * BigRational(boost::multiprecision::pow(
                                               scale, k)));
    return BigRational(kth_root_floor(scaled, k), scale);
}

BigRational kth_root_upper(const BigRational& value, unsigned k,
                           unsigned scale_bits) {
    if (value < 0) throw Error("kth_root_upper: negative value");
    const BigInt scale = BigInt(1) << scale_bits;
    BigInt scaled = rational_ceil(value * BigRational(boost::multiprecision::pow(
                                              scale, k)));
    BigInt m = kth_root_floor(scaled, k);
    if (boost::multiprecision::pow(m, k) < scaled) ++m;
    return BigRational(m, scale);
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// GMP's string constructor auto-detects octal on a leading zero, so strip
// leading zeros before handing digits over.
BigInt digits_to_int(const std::string& s) {
    std::size_t first = s.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(s.substr(first));
}

}  // namespace

BigRational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty number", 0);

    // Fraction form "p/q".
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string ns = text.substr(0, slash);
        std::string ds = text.substr(slash + 1);
        bool nneg = !ns.empty() && ns[0] == '-';
        if (nneg || (!ns.empty() && ns[0] == '+')) ns = ns.substr(1);
        if (!all_digits(ns)) throw ParseError("bad numerator", 0);
        if (!all_digits(ds)) throw ParseError("bad denominator", slash + 1);
        BigInt n = digits_to_int(ns), d = digits_to_int(ds);
        if (d == 0) throw ParseError("zero denominator", slash + 1);
        BigRational q(n, d);
        return nneg ? BigRational(-q) : q;
    }

    // Decimal / scientific form.
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    std::string intpart, fracpart;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        intpart += text[i++];
    if (i < text.size() && text[i] == '.') {
        ++i;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            fracpart += text[i++];
    }
    if (intpart.empty() && fracpart.empty())
        throw ParseError("expected digits", i);
    long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool eneg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            eneg = text[i] == '-';
            ++i;
        }
        std::string es;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i])))
            es += text[i++];
        if (es.empty()) throw ParseError("expected exponent digits", i);
        if (es.size() > 6) throw ParseError("exponent out of range", i);
        exponent = std::stol(es);
        if (eneg) exponent = -exponent;
    }
    if (i != text.size()) throw ParseError("trailing characters in number", i);

    BigInt mantissa = digits_to_int(intpart + fracpart);
    long shift = exponent - static_cast<long>(fracpart.size());
    BigRational q(mantissa);
    if (shift > 0)
        q *= BigRational(boost::multiprecision::pow(BigInt(10),
                                                    static_cast<unsigned>(shift)));
    else if (shift < 0)
        q /= BigRational(boost::multiprecision::pow(
            BigInt(10), static_cast<unsigned>(-shift)));
    return neg ? BigRational(-q) : q;
}

std::string rational_to_string(const BigRational& q) {
    if (den(q) == 1) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

std::string format_significant(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

double to_double(const BigRational& q) { return q.convert_to<double>(); }

}  // namespace cremona
