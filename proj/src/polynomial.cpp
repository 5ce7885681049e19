#include "cremona/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cremona {

UnivariatePolynomial::UnivariatePolynomial(std::vector<BigRational> coeffs)
    : c_(std::move(coeffs)) {
    trim();
}

void UnivariatePolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::from_int_coefficients(
    const std::vector<BigInt>& coeffs) {
    std::vector<BigRational> c;
    c.reserve(coeffs.size());
    for (const BigInt& v : coeffs) c.emplace_back(v);
    return UnivariatePolynomial(std::move(c));
}

UnivariatePolynomial UnivariatePolynomial::monomial(const BigRational& c,
                                                    std::size_t power) {
    std::vector<BigRational> v(power + 1, BigRational(0));
    v[power] = c;
    return UnivariatePolynomial(std::move(v));
}

const BigRational& UnivariatePolynomial::coeff(std::size_t i) const {
    static const BigRational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

const BigRational& UnivariatePolynomial::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

UnivariatePolynomial UnivariatePolynomial::operator+(
    const UnivariatePolynomial& o) const {
    std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-(
    const UnivariatePolynomial& o) const {
    std::vector<BigRational> r(std::max(c_.size(), o.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator*(
    const UnivariatePolynomial& o) const {
    if (is_zero() || o.is_zero()) return UnivariatePolynomial();
    std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::operator-() const {
    std::vector<BigRational> r = c_;
    for (auto& v : r) v = -v;
    return UnivariatePolynomial(std::move(r));
}

UnivariatePolynomial UnivariatePolynomial::scaled(const BigRational& s) const {
    std::vector<BigRational> r = c_;
    for (auto& v : r) v *= s;
    return UnivariatePolynomial(std::move(r));
}

BigRational UnivariatePolynomial::evaluate(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    if (c_.size() <= 1) return UnivariatePolynomial();
    std::vector<BigRational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    return UnivariatePolynomial(std::move(r));
}

std::pair<UnivariatePolynomial, UnivariatePolynomial>
UnivariatePolynomial::divmod(const UnivariatePolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by zero polynomial");
    std::vector<BigRational> rem = c_;
    const int dd = divisor.degree();
    if (degree() < dd)
        return {UnivariatePolynomial(), *this};
    std::vector<BigRational> quot(c_.size() - dd, BigRational(0));
    for (int i = degree(); i >= dd; --i) {
        BigRational f = rem[i] / divisor.leading();
        if (f == 0) continue;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
    }
    return {UnivariatePolynomial(std::move(quot)),
            UnivariatePolynomial(std::move(rem))};
}

UnivariatePolynomial UnivariatePolynomial::gcd(UnivariatePolynomial a,
                                               UnivariatePolynomial b) {
    // Euclid over Q with content normalization each step to tame growth.
    auto normalize = [](UnivariatePolynomial& p) {
        if (p.is_zero()) return;
        auto prim = p.primitive_integer_coefficients();
        p = from_int_coefficients(prim);
    };
    normalize(a);
    normalize(b);
    while (!b.is_zero()) {
        UnivariatePolynomial r = a.divmod(b).second;
        normalize(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scaled(BigRational(1) / a.leading());
}

UnivariatePolynomial UnivariatePolynomial::squarefree_part() const {
    if (is_zero()) throw Error("squarefree part of zero polynomial");
    if (degree() == 0) return monomial(BigRational(1), 0);
    UnivariatePolynomial g = gcd(*this, derivative());
    UnivariatePolynomial q = divmod(g).first;
    return q.scaled(BigRational(1) / q.leading());
}

int UnivariatePolynomial::multiplicity_of_root(const BigRational& r) const {
    if (is_zero()) throw Error("multiplicity in zero polynomial");
    UnivariatePolynomial p = *this;
    UnivariatePolynomial factor(
        std::vector<BigRational>{-r, BigRational(1)});
    int mult = 0;
    while (!p.is_zero() && p.evaluate(r) == 0) {
        p = p.divmod(factor).first;
        ++mult;
    }
    return mult;
}

std::vector<BigInt> UnivariatePolynomial::primitive_integer_coefficients()
    const {
    if (is_zero()) return {};
    BigInt den_lcm = 1;
    for (const auto& q : c_)
        den_lcm = boost::multiprecision::lcm(den_lcm, den(q));
    std::vector<BigInt> r;
    r.reserve(c_.size());
    BigInt content = 0;
    for (const auto& q : c_) {
        BigInt v = num(q) * (den_lcm / den(q));
        content = boost::multiprecision::gcd(content, v);
        r.push_back(std::move(v));
    }
    if (r.back() < 0) content = -content;
    for (auto& v : r) v /= content;
    return r;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& q = c_[static_cast<std::size_t>(i)];
        if (q == 0) continue;
        BigRational a = cremona::abs(q);
        if (out.empty())
            out += (q < 0) ? "-" : "";
        else
            out += (q < 0) ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) out += rational_to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UnivariatePolynomial lagrange_interpolate(const std::vector<BigRational>& xs,
                                          const std::vector<BigRational>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw Error("lagrange_interpolate: bad point set");
    UnivariatePolynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UnivariatePolynomial basis =
            UnivariatePolynomial::monomial(BigRational(1), 0);
        BigRational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis *
                    UnivariatePolynomial(std::vector<BigRational>{
                        -xs[j], BigRational(1)});
            denom *= xs[i] - xs[j];
        }
        if (denom == 0) throw Error("lagrange_interpolate: repeated x value");
        acc = acc + basis.scaled(ys[i] / denom);
    }
    return acc;
}

UnivariatePolynomial minimal_recurrence(const std::vector<BigInt>& seq) {
    if (seq.empty()) throw Error("minimal_recurrence: empty sequence");

    // Berlekamp-Massey over Q. c is the connection polynomial with c[0] = 1:
    // discrepancy d_n = sum_i c[i] * s[n - i].
    std::vector<BigRational> c{BigRational(1)};
    std::vector<BigRational> b{BigRational(1)};
    std::size_t L = 0, m = 1;
    BigRational last_discrepancy(1);

    for (std::size_t n = 0; n < seq.size(); ++n) {
        BigRational d(seq[n]);
        for (std::size_t i = 1; i <= L && i <= n; ++i)
            d += c[i] * BigRational(seq[n - i]);
        if (d == 0) {
            ++m;
            continue;
        }
        if (2 * L <= n) {
            std::vector<BigRational> old_c = c;
            BigRational f = d / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, BigRational(0));
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= f * b[i];
            L = n + 1 - L;
            b = std::move(old_c);
            last_discrepancy = d;
            m = 1;
        } else {
            BigRational f = d / last_discrepancy;
            if (c.size() < b.size() + m) c.resize(b.size() + m, BigRational(0));
            for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= f * b[i];
            ++m;
        }
    }

    // Connection polynomial c(x) = 1 + c1 x + ... + cL x^L annihilates via
    // s[n] = -sum_{i>=1} c[i] s[n-i]; the characteristic polynomial is its
    // reverse, monic of degree L.
    c.resize(L + 1, BigRational(0));
    std::vector<BigRational> mu(L + 1);
    for (std::size_t i = 0; i <= L; ++i) mu[L - i] = c[i];
    return UnivariatePolynomial(std::move(mu));
}

}  // namespace cremona
