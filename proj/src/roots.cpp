#include "cremona/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "cremona/matrix.hpp"

namespace cremona {

std::string to_string(RadiusMethod m) {
    switch (m) {
        case RadiusMethod::Graeffe: return "graeffe";
        case RadiusMethod::Sturm: return "sturm";
        case RadiusMethod::GrowthRatio: return "growth-ratio";
    }
    throw std::logic_error("unknown RadiusMethod");
}

namespace {

using IVec = std::vector<BigInt>;  // ascending coefficients, trimmed

IVec primitive(IVec v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return v;
    BigInt content = 0;
    for (const BigInt& c : v) content = boost::multiprecision::gcd(content, c);
    for (BigInt& c : v) c /= content;
    return v;
}

IVec to_ivec(const UnivariatePolynomial& p) {
    return p.primitive_integer_coefficients();
}

UnivariatePolynomial to_poly(const IVec& v) {
    return UnivariatePolynomial::from_int_coefficients(v);
}

/// Sign of p at the rational a/b: evaluates sum c_i a^i b^(n-i) exactly.
int eval_sign(const IVec& p, const BigRational& x) {
    if (p.empty()) return 0;
    const BigInt a = num(x), b = den(x);
    const std::size_t n = p.size() - 1;
    BigInt acc = 0;
    BigInt apow = 1;
    std::vector<BigInt> bpows(n + 1);
    bpows[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) bpows[i] = bpows[i - 1] * b;
    for (std::size_t i = 0; i <= n; ++i) {
        acc += p[i] * apow * bpows[n - i];
        apow *= a;
    }
    return sign(acc);
}

IVec int_derivative(const IVec& p) {
    if (p.size() <= 1) return {};
    IVec r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        r[i - 1] = p[i] * BigInt(static_cast<long>(i));
    return r;
}

/// Pseudo-remainder lc(b)^(da-db+1) * a mod b, integer arithmetic. Each
/// elimination pass contributes one factor of lc; when the degree drops by
/// more than 1 the remainder is topped up to the full power so the sign
/// parity downstream stays predictable.
IVec pseudo_rem(IVec a, const IVec& b) {
    const int db = static_cast<int>(b.size()) - 1;
    const BigInt& lc = b.back();
    int da = static_cast<int>(a.size()) - 1;
    const int needed = da - db + 1;
    int passes = 0;
    while (da >= db && !a.empty()) {
        BigInt f = a.back();
        for (BigInt& c : a) c *= lc;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= f * b[static_cast<std::size_t>(j)];
        while (!a.empty() && a.back() == 0) a.pop_back();
        da = static_cast<int>(a.size()) - 1;
        ++passes;
    }
    for (; passes < needed; ++passes)
        for (BigInt& c : a) c *= lc;
    return a;
}

/// Sturm chain of a squarefree primitive integer polynomial. Each element is
/// primitive; signs are preserved (only positive rescaling).
class SturmChain {
public:
    explicit SturmChain(IVec squarefree) {
        elems_.push_back(std::move(squarefree));
        IVec d = primitive(int_derivative(elems_[0]));
        if (!d.empty()) elems_.push_back(std::move(d));
        while (elems_.back().size() > 1) {
            const IVec& p_prev = elems_[elems_.size() - 2];
            const IVec& p_cur = elems_.back();
            const int delta =
                static_cast<int>(p_prev.size()) - static_cast<int>(p_cur.size());
            IVec r = pseudo_rem(p_prev, p_cur);
            if (r.empty()) break;  // cannot happen for squarefree input
            // r = lc^(delta+1) * (p_prev mod p_cur); the next Sturm element is
            // -(p_prev mod p_cur) up to positive scale, so flip the sign of r
            // when the pseudo multiplier was positive.
            const bool mult_negative =
                p_cur.back() < 0 && ((delta + 1) % 2 == 1);
            if (!mult_negative)
                for (BigInt& c : r) c = -c;
            elems_.push_back(primitive(std::move(r)));
        }
    }

    /// Sign variations at x, zeros dropped.
    int variations(const BigRational& x) const {
        int count = 0, prev = 0;
        for (const IVec& e : elems_) {
            int s = eval_sign(e, x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    /// Number of distinct real roots in (lo, hi]. Valid for squarefree input
    /// even when an endpoint is itself a root (variations are computed with
    /// zero-dropping, which makes the count right-continuous).
    int count(const BigRational& lo, const BigRational& hi) const {
        return variations(lo) - variations(hi);
    }

    const IVec& polynomial() const { return elems_[0]; }

private:
    std::vector<IVec> elems_;
};

IVec squarefree_ivec(const UnivariatePolynomial& p) {
    return p.squarefree_part().primitive_integer_coefficients();
}

BigRational cauchy_bound(const IVec& p) {
    BigRational m(0);
    const BigInt lead = abs(p.back());
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        m = std::max(m, BigRational(abs(p[i]), lead));
    return m + 1;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= BigInt(n - i);
        r /= BigInt(i + 1);
    }
    return r;
}

struct Interval {
    BigRational lo, hi;
};

/// Shrinks an isolating interval (lo, hi] of chain's polynomial by one
/// bisection step, keeping the unique root inside.
void bisect_step(const SturmChain& chain, Interval& iv) {
    if (iv.lo == iv.hi) return;
    BigRational mid = (iv.lo + iv.hi) / 2;
    if (eval_sign(chain.polynomial(), mid) == 0) {
        iv.lo = iv.hi = mid;
        return;
    }
    if (chain.count(mid, iv.hi) == 1)
        iv.lo = mid;
    else
        iv.hi = mid;
}

Interval abs_interval(const Interval& iv) {
    if (iv.lo >= 0) return iv;
    if (iv.hi <= 0) return {-iv.hi, -iv.lo};
    return {BigRational(0), std::max(BigRational(-iv.lo), iv.hi)};
}

BigRational sqrt_lower(const BigRational& v) { return kth_root_lower(v, 2, 96); }
BigRational sqrt_upper(const BigRational& v) { return kth_root_upper(v, 2, 96); }

/// Directed 2^k-th roots by repeated square roots.
BigRational root_pow2_lower(BigRational v, unsigned k) {
    for (unsigned i = 0; i < k; ++i) v = sqrt_lower(v);
    return v;
}
BigRational root_pow2_upper(BigRational v, unsigned k) {
    for (unsigned i = 0; i < k; ++i) v = sqrt_upper(v);
    return v;
}

/// Largest-modulus real root bound from the elementary-symmetric inequality
/// |e_i| <= C(n,i) R^i: a certified lower bound for R.
BigRational binomial_lower_bound(const IVec& p) {
    const unsigned n = static_cast<unsigned>(p.size() - 1);
    const BigInt lead = abs(p.back());
    BigRational best(0);
    for (unsigned i = 1; i <= n; ++i) {
        const BigInt& c = p[n - i];
        if (c == 0) continue;
        BigRational v(abs(c), lead * binomial(n, i));
        best = std::max(best, kth_root_lower(v, i, 96));
    }
    return best;
}

/// Smallest B (within 2^-extra_bits relative slack) with
/// B^n >= sum_i |c_{n-i}| B^{n-i}; every root modulus is <= any such B.
BigRational predicate_upper_bound(const IVec& p, unsigned extra_bits) {
    const std::size_t n = p.size() - 1;
    const BigInt lead = abs(p.back());
    // ok(b) <=> b^n |lead| >= sum_{i>=1} |c_{n-i}| b^{n-i}; monotone in b, and
    // every root modulus is <= any b satisfying it.
    auto ok = [&](const BigRational& b) {
        std::vector<BigRational> pows(n + 1);
        pows[0] = 1;
        for (std::size_t i = 1; i <= n; ++i) pows[i] = pows[i - 1] * b;
        BigRational rhs(0);
        for (std::size_t i = 1; i <= n; ++i)
            if (p[n - i] != 0) rhs += BigRational(abs(p[n - i])) * pows[n - i];
        return pows[n] * BigRational(lead) >= rhs;
    };
    BigRational hi = cauchy_bound(p);
    BigRational lo(0);
    // Bisect; the predicate is monotone increasing in B.
    for (unsigned step = 0; step < extra_bits + 40; ++step) {
        BigRational mid = (lo + hi) / 2;
        if (ok(mid))
            hi = mid;
        else
            lo = mid;
        if (hi - lo <= hi / (BigRational(BigInt(1) << extra_bits)))
            break;
    }
    return hi;
}

std::size_t total_bits(const IVec& p) {
    std::size_t bits = 0;
    for (const BigInt& c : p)
        bits += mpz_sizeinbase(c.backend().data(), 2);
    return bits;
}

/// Resultant-based polynomial whose real positive roots include R^2 as the
/// maximum: q(u) = Res_y(p(y), y^n p(u/y)) has roots {r_i r_j} over all
/// ordered root pairs of p.
UnivariatePolynomial modulus_squared_poly(const IVec& p) {
    const std::size_t n = p.size() - 1;
    const std::size_t qdeg = n * n;
    std::vector<BigRational> xs, ys;
    for (std::size_t u = 0; u <= qdeg; ++u) {
        // g(y) = sum_i c_i u^i y^(n-i), degree n with leading c_0 != 0.
        IVec g(n + 1);
        BigInt upow = 1;
        for (std::size_t i = 0; i <= n; ++i) {
            g[n - i] = p[i] * upow;
            upow *= BigInt(static_cast<long>(u));
        }
        // Sylvester matrix of p and g (both degree n), entries descending.
        IntegerMatrix s(2 * n, 2 * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t <= n; ++t)
                s.at(r, r + t) = p[n - t];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t t = 0; t <= n; ++t)
                s.at(n + r, r + t) = g[n - t];
        xs.emplace_back(static_cast<long>(u));
        ys.emplace_back(bareiss_determinant(std::move(s)));
    }
    return lagrange_interpolate(xs, ys);
}

}  // namespace

std::vector<BigInt> graeffe_step(const std::vector<BigInt>& coeffs) {
    if (coeffs.empty()) throw Error("graeffe_step: zero polynomial");
    const std::size_t n = coeffs.size() - 1;
    // p(x) = E(x^2) + x O(x^2);  q(y) = +-(E^2 - y O^2) has roots r^2.
    IVec e, o;
    for (std::size_t i = 0; i <= n; ++i)
        (i % 2 == 0 ? e : o).push_back(coeffs[i]);
    auto mul = [](const IVec& a, const IVec& b) {
        if (a.empty() || b.empty()) return IVec{};
        IVec r(a.size() + b.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    IVec e2 = mul(e, e), o2 = mul(o, o);
    IVec q(n + 1, BigInt(0));
    for (std::size_t i = 0; i < e2.size() && i <= n; ++i) q[i] += e2[i];
    for (std::size_t i = 0; i + 1 <= n && i < o2.size(); ++i) q[i + 1] -= o2[i];
    q = primitive(std::move(q));
    if (!q.empty() && q.back() < 0)
        for (BigInt& c : q) c = -c;
    return q;
}

int count_real_roots(const UnivariatePolynomial& p, const BigRational& lo,
                     const BigRational& hi) {
    if (p.is_zero()) throw Error("count_real_roots: zero polynomial");
    if (lo > hi) throw Error("count_real_roots: empty interval");
    if (p.degree() == 0) return 0;
    IVec sf = squarefree_ivec(p);
    SturmChain chain(sf);
    // Sturm counts (lo, hi]; the contract is the closed interval.
    return chain.count(lo, hi) + (eval_sign(sf, lo) == 0 ? 1 : 0);
}

std::vector<RootInterval> sturm_real_roots(const UnivariatePolynomial& p,
                                           const BigRational& lo,
                                           const BigRational& hi) {
    if (p.is_zero()) throw Error("sturm_real_roots: zero polynomial");
    if (lo > hi) throw Error("sturm_real_roots: lo > hi");
    std::vector<Interval> found;
    if (p.degree() == 0) return {};
    IVec sf = squarefree_ivec(p);
    SturmChain chain(sf);

    if (eval_sign(sf, lo) == 0) found.push_back({lo, lo});

    // Isolate inside (lo, hi] by bisection on half-open pieces.
    std::vector<Interval> work{{lo, hi}};
    while (!work.empty()) {
        Interval iv = work.back();
        work.pop_back();
        int c = chain.count(iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            // Tighten so the closed interval starts at a non-root (or is
            // degenerate); the unique root lies in (lo, hi].
            while (true) {
                if (eval_sign(sf, iv.hi) == 0) {
                    iv.lo = iv.hi;
                    break;
                }
                if (eval_sign(sf, iv.lo) != 0) break;
                bisect_step(chain, iv);
            }
            found.push_back(iv);
            continue;
        }
        BigRational mid = (iv.lo + iv.hi) / 2;
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }

    std::sort(found.begin(), found.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    // Separate intervals that share an endpoint; roots are strictly inside
    // the shared point's neighbors, so a few bisections suffice.
    for (std::size_t i = 0; i + 1 < found.size(); ++i) {
        while (found[i].hi >= found[i + 1].lo &&
               !(found[i + 1].lo == found[i + 1].hi)) {
            bisect_step(chain, found[i + 1]);
            if (found[i].hi >= found[i + 1].lo && !(found[i].lo == found[i].hi))
                bisect_step(chain, found[i]);
            if (found[i].lo == found[i].hi &&
                found[i + 1].lo == found[i + 1].hi)
                break;
        }
    }

    std::vector<RootInterval> out;
    out.reserve(found.size());
    for (const Interval& iv : found) out.push_back({iv.lo, iv.hi});
    return out;
}

bool all_roots_in_closed_unit_disk(const UnivariatePolynomial& p) {
    if (p.is_zero())
        throw Error("all_roots_in_closed_unit_disk: zero polynomial");
    IVec v = to_ivec(p);
    std::size_t strip = 0;
    while (strip < v.size() && v[strip] == 0) ++strip;
    v.erase(v.begin(), v.begin() + static_cast<long>(strip));
    if (v.size() <= 1) return true;  // only zero roots
    if (abs(v.back()) != 1)
        throw Error(
            "all_roots_in_closed_unit_disk: unit leading coefficient required");
    v = squarefree_ivec(to_poly(v));
    if (v.back() < 0)
        for (BigInt& c : v) c = -c;

    std::set<IVec> seen;
    for (int iter = 0; iter < 256; ++iter) {
        const unsigned n = static_cast<unsigned>(v.size() - 1);
        for (unsigned i = 1; i <= n; ++i)
            if (abs(v[n - i]) > binomial(n, i)) return false;
        if (!seen.insert(v).second) return true;
        v = graeffe_step(v);
    }
    throw std::logic_error(
        "all_roots_in_closed_unit_disk: no decision after 256 iterations");
}

RadiusEstimate dominant_modulus(const UnivariatePolynomial& p,
                                const BigRational& tol) {
    if (p.is_zero()) throw Error("dominant_modulus: zero polynomial");
    if (p.degree() < 1) throw Error("dominant_modulus: constant polynomial");
    if (tol <= 0) throw Error("dominant_modulus: tolerance must be positive");

    IVec v = to_ivec(p);
    std::size_t strip = 0;
    while (v[strip] == 0) ++strip;
    v.erase(v.begin(), v.begin() + static_cast<long>(strip));
    if (v.size() == 1)
        return {BigRational(0), BigRational(0), RadiusMethod::Sturm};

    IVec sf = squarefree_ivec(to_poly(v));
    const std::size_t n = sf.size() - 1;

    if (n == 1) {
        BigRational r = cremona::abs(BigRational(sf[0], sf[1]));
        return {r, r, RadiusMethod::Sturm};
    }

    if (abs(sf.back()) == 1 && all_roots_in_closed_unit_disk(to_poly(sf)))
        return {BigRational(1), BigRational(1), RadiusMethod::Graeffe};

    SturmChain chain(sf);
    const BigRational bound = cauchy_bound(sf);
    const int real_count = chain.count(-bound, bound);

    if (real_count == static_cast<int>(n)) {
        // All roots real: refine the extreme isolating intervals.
        auto roots = sturm_real_roots(to_poly(sf), -bound, bound);
        Interval left{roots.front().lo, roots.front().hi};
        Interval right{roots.back().lo, roots.back().hi};
        while (true) {
            Interval la = abs_interval(left), ra = abs_interval(right);
            BigRational lo = std::max(la.lo, ra.lo);
            BigRational hi = std::max(la.hi, ra.hi);
            if (hi - lo <= tol) return {lo, hi, RadiusMethod::Sturm};
            bisect_step(chain, left);
            bisect_step(chain, right);
        }
    }

    if (n == 2) {
        // Complex conjugate pair: R = sqrt(|c0 / c2|).
        BigRational m2 = cremona::abs(BigRational(sf[0], sf[2]));
        BigRational lo = sqrt_lower(m2), hi = sqrt_upper(m2);
        if (hi - lo > tol)
            throw std::logic_error("dominant_modulus: sqrt refinement stalled");
        return {lo, hi, RadiusMethod::Sturm};
    }

    if (n <= 8) {
        // Exact route via the modulus-squared resultant: the largest positive
        // real root of q is exactly R^2.
        UnivariatePolynomial q = modulus_squared_poly(sf);
        IVec qsf = squarefree_ivec(q);
        SturmChain qchain(qsf);
        auto qroots = sturm_real_roots(q, BigRational(0), cauchy_bound(qsf));
        if (qroots.empty())
            throw std::logic_error(
                "dominant_modulus: modulus-squared polynomial has no "
                "positive real root");
        Interval top{qroots.back().lo, qroots.back().hi};
        while (true) {
            BigRational lo = sqrt_lower(std::max(BigRational(0), top.lo));
            BigRational hi = sqrt_upper(top.hi);
            if (hi - lo <= tol) return {lo, hi, RadiusMethod::Sturm};
            bisect_step(qchain, top);
        }
    }

    // Budgeted Graeffe sandwich. Lower bounds: binomial inequality plus the
    // largest |real root| (refined by Sturm when real roots exist). Upper
    // bounds: the monotone Cauchy-companion predicate on each iterate.
    BigRational best_lo = binomial_lower_bound(sf);
    BigRational best_hi = predicate_upper_bound(sf, 40);
    if (real_count > 0) {
        auto roots = sturm_real_roots(to_poly(sf), -bound, bound);
        Interval left{roots.front().lo, roots.front().hi};
        Interval right{roots.back().lo, roots.back().hi};
        for (int step = 0; step < 80; ++step) {
            Interval la = abs_interval(left), ra = abs_interval(right);
            best_lo = std::max(best_lo, std::max(la.lo, ra.lo));
            if (std::max(la.hi, ra.hi) - std::max(la.lo, ra.lo) <= tol / 2)
                break;
            bisect_step(chain, left);
            bisect_step(chain, right);
        }
    }

    IVec g = sf;
    constexpr std::size_t kBitBudget = 40000;
    for (unsigned k = 1; k <= 24; ++k) {
        g = graeffe_step(g);
        best_lo = std::max(best_lo, root_pow2_lower(binomial_lower_bound(g), k));
        best_hi = std::min(best_hi,
                           root_pow2_upper(predicate_upper_bound(g, k + 20), k));
        if (best_hi - best_lo <= tol)
            return {best_lo, best_hi, RadiusMethod::Graeffe};
        if (total_bits(g) > kBitBudget) break;
    }
    throw ToleranceError("dominant_modulus: tolerance not reached within budget",
                         rational_to_string(best_lo),
                         rational_to_string(best_hi));
}

}  // namespace cremona
