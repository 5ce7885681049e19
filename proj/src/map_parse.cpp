#include "cremona/map_parse.hpp"

#include <array>
#include <cctype>
#include <optional>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

constexpr std::uint16_t kMaxExponent = 512;

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    bool accept(char c) {
        skip_ws();
        if (!done() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
    }
};

int var_index(char c) {
    for (std::size_t i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == c) return static_cast<int>(i);
    return -1;
}

// leading zeros stripped so the GMP constructor cannot mistake the digits
// for octal
BigInt digits_to_bigint(const std::string& s) {
    std::size_t first = s.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(s.substr(first));
}

std::optional<BigInt> read_integer(Cursor& cur) {
    cur.skip_ws();
    std::size_t start = cur.pos;
    while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek())))
        ++cur.pos;
    if (cur.pos == start) return std::nullopt;
    if (cur.pos - start > 40)
        throw ParseError("integer literal too long", start);
    return digits_to_bigint(cur.text.substr(start, cur.pos - start));
}

// one product of an optional coefficient and variable powers
Term read_term(Cursor& cur, bool allow_param,
               std::array<std::size_t, kVarCount>& first_use) {
    Term t{Monomial{}, BigInt(1)};
    bool any = false;

    if (auto c = read_integer(cur)) {
        t.coeff = *c;
        any = true;
        cur.accept('*');  // optional separator before the variables
    }
    while (true) {
        cur.skip_ws();
        if (cur.done()) break;
        int vi = var_index(cur.peek());
        if (vi < 0) break;
        if (vi == static_cast<int>(kParamVar) && !allow_param)
            throw ParseError("parameter s is not allowed in a plain map",
                             cur.pos);
        if (first_use[static_cast<std::size_t>(vi)] == std::string::npos)
            first_use[static_cast<std::size_t>(vi)] = cur.pos;
        ++cur.pos;
        std::uint16_t exp = 1;
        if (cur.accept('^')) {
            std::size_t at = cur.pos;
            auto e = read_integer(cur);
            if (!e) throw ParseError("expected an exponent after '^'", at);
            if (*e > kMaxExponent)
                throw ParseError("exponent too large", at);
            exp = e->convert_to<std::uint16_t>();
        }
        std::size_t slot = static_cast<std::size_t>(vi);
        if (t.mono[slot] + exp > kMaxExponent)
            throw ParseError("exponent too large", cur.pos);
        t.mono[slot] = static_cast<std::uint16_t>(t.mono[slot] + exp);
        any = true;
        cur.accept('*');  // optional between factors
    }
    if (!any) throw ParseError("expected a term", cur.pos);
    return t;
}

MultiPoly read_poly(Cursor& cur, bool allow_param,
                    std::array<std::size_t, kVarCount>& first_use) {
    std::vector<Term> terms;
    cur.skip_ws();
    bool neg = false;
    if (cur.accept('-'))
        neg = true;
    else
        cur.accept('+');
    while (true) {
        Term t = read_term(cur, allow_param, first_use);
        if (neg) t.coeff = -t.coeff;
        terms.push_back(std::move(t));
        cur.skip_ws();
        if (cur.accept('-'))
            neg = true;
        else if (cur.accept('+'))
            neg = false;
        else
            break;
    }
    return MultiPoly::from_terms(std::move(terms));
}

}  // namespace

std::vector<MultiPoly> parse_map_components(const std::string& text,
                                            bool allow_param) {
    Cursor cur{text};
    std::array<std::size_t, kVarCount> first_use;
    first_use.fill(std::string::npos);

    cur.expect('[', "to open the map");
    std::vector<MultiPoly> comps;
    comps.push_back(read_poly(cur, allow_param, first_use));
    while (cur.accept(':'))
        comps.push_back(read_poly(cur, allow_param, first_use));
    cur.expect(']', "to close the map");
    cur.skip_ws();
    if (!cur.done())
        throw ParseError("unexpected trailing characters", cur.pos);

    if (comps.size() < 2 || comps.size() > kProjectiveVars)
        throw ParseError("a map needs 2 to 5 components", 0);
    std::size_t ambient = comps.size() - 1;  // P^ambient
    for (std::size_t v = ambient + 1; v < kProjectiveVars; ++v) {
        if (first_use[v] != std::string::npos)
            throw ParseError(std::string("variable '") + kVarNames[v] +
                                 "' is outside P^" + std::to_string(ambient),
                             first_use[v]);
    }
    return comps;
}

std::vector<BigRational> parse_grid(const std::string& text) {
    std::size_t c1 = text.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos
                                             : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw ParseError("grid must look like lo:hi:count", 0);

    auto field = [&](std::size_t from, std::size_t to) {
        std::size_t a = from;
        while (a < to && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
        std::size_t b = to;
        while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1])))
            --b;
        return std::pair<std::string, std::size_t>(text.substr(a, b - a), a);
    };
    auto parse_field = [&](std::size_t from, std::size_t to) {
        auto [s, at] = field(from, to);
        try {
            return parse_rational(s);
        } catch (const ParseError& e) {
            throw ParseError("bad grid bound '" + s + "'", at + e.position());
        }
    };

    BigRational lo = parse_field(0, c1);
    BigRational hi = parse_field(c1 + 1, c2);

    auto [cnt_text, cnt_at] = field(c2 + 1, text.size());
    if (cnt_text.empty() ||
        cnt_text.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("grid count must be a positive integer", cnt_at);
    if (cnt_text.size() > 6)
        throw ParseError("grid count too large", cnt_at);
    long count = std::stol(cnt_text);
    if (count < 1) throw ParseError("grid count must be a positive integer", cnt_at);

    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
        out.push_back(lo);
        return out;
    }
    BigRational step = (hi - lo) / BigRational(count - 1);
    for (long i = 0; i < count; ++i)
        out.push_back(lo + step * BigRational(i));
    return out;
}

}  // namespace cremona
