#include "cremona/multipoly.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cremona {

const char kVarNames[kVarCount] = {'x', 'y', 'z', 'w', 'v', 's'};

namespace {

bool mono_before(const Monomial& a, const Monomial& b) { return a > b; }

std::size_t bits_of(const BigInt& v) {
    if (v == 0) return 1;
    return mpz_sizeinbase(v.backend().data(), 2);
}

}  // namespace

MultiPoly MultiPoly::constant(const BigInt& c) {
    MultiPoly p;
    if (c != 0) p.terms_.push_back({Monomial{}, c});
    return p;
}

MultiPoly MultiPoly::variable(std::size_t var, std::uint16_t power) {
    if (var >= kVarCount) throw Error("variable index out of range");
    Monomial m{};
    m[var] = power;
    MultiPoly p;
    p.terms_.push_back({m, BigInt(1)});
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return mono_before(a.mono, b.mono); });
    MultiPoly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    }
    return p;
}

const Term& MultiPoly::leading() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
}

int MultiPoly::degree(std::size_t var) const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.mono[var]));
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (std::uint16_t e : t.mono) s += e;
        d = std::max(d, s);
    }
    return d;
}

int MultiPoly::projective_degree() const {
    int d = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (std::size_t i = 0; i < kProjectiveVars; ++i) s += t.mono[i];
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::is_projective_homogeneous() const {
    if (terms_.empty()) return true;
    int want = -1;
    for (const Term& t : terms_) {
        int s = 0;
        for (std::size_t i = 0; i < kProjectiveVars; ++i) s += t.mono[i];
        if (want < 0) want = s;
        if (s != want) return false;
    }
    return true;
}

bool MultiPoly::uses_var(std::size_t var) const {
    for (const Term& t : terms_)
        if (t.mono[var] != 0) return true;
    return false;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].mono == o.terms_[j].mono) {
            BigInt c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back({terms_[i].mono, std::move(c)});
            ++i;
            ++j;
        } else if (mono_before(terms_[i].mono, o.terms_[j].mono)) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    MultiPoly p;
    p.terms_ = std::move(out);
    return p;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const BigInt& c) const {
    if (c == 0) return {};
    MultiPoly p = *this;
    for (Term& t : p.terms_) t.coeff *= c;
    return p;
}

MultiPoly MultiPoly::scaled_by_term(const Monomial& m, const BigInt& c) const {
    if (c == 0) return {};
    MultiPoly p = *this;
    for (Term& t : p.terms_) {
        t.coeff *= c;
        for (std::size_t i = 0; i < kVarCount; ++i)
            t.mono[i] = static_cast<std::uint16_t>(t.mono[i] + m[i]);
    }
    return p;
}

namespace {

// Multiplication plan: the exponent vector of any product term is packed
// into a single integer slot index. When both factors are projectively
// homogeneous, the highest active projective variable is omitted and
// reconstructed from the total degree.
struct MulPlan {
    std::array<std::uint64_t, kVarCount> stride{};
    std::array<std::uint32_t, kVarCount> limit{};
    std::array<bool, kVarCount> packed{};
    std::size_t omit = static_cast<std::size_t>(-1);
    int omit_total = -1;
    std::uint64_t slots = 0;  // 0 means the plan is unusable
};

MulPlan make_plan(const MultiPoly& a, const MultiPoly& b,
                  std::uint64_t max_slots) {
    MulPlan plan;
    std::array<bool, kVarCount> active{};
    std::size_t projective_active = 0;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        active[v] = a.uses_var(v) || b.uses_var(v);
        if (active[v] && v < kProjectiveVars) ++projective_active;
    }
    if (projective_active >= 2 && a.is_projective_homogeneous() &&
        b.is_projective_homogeneous()) {
        for (std::size_t v = kProjectiveVars; v-- > 0;) {
            if (active[v]) {
                plan.omit = v;
                plan.omit_total = a.projective_degree() + b.projective_degree();
                break;
            }
        }
    }
    unsigned __int128 slots = 1;
    std::uint64_t stride = 1;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        if (!active[v] || v == plan.omit) continue;
        std::uint32_t lim =
            static_cast<std::uint32_t>(a.degree(v) + b.degree(v) + 1);
        plan.packed[v] = true;
        plan.limit[v] = lim;
        plan.stride[v] = stride;
        slots *= lim;
        if (slots > max_slots) return plan;  // slots stays 0
        stride = static_cast<std::uint64_t>(slots);
    }
    plan.slots = static_cast<std::uint64_t>(slots);
    return plan;
}

std::uint64_t plan_key(const MulPlan& plan, const Monomial& m) {
    std::uint64_t k = 0;
    for (std::size_t v = 0; v < kVarCount; ++v)
        if (plan.packed[v]) k += plan.stride[v] * m[v];
    return k;
}

Monomial plan_monomial(const MulPlan& plan, std::uint64_t key) {
    Monomial m{};
    for (std::size_t v = kVarCount; v-- > 0;) {
        if (!plan.packed[v]) continue;
        m[v] = static_cast<std::uint16_t>(key / plan.stride[v]);
        key %= plan.stride[v];
    }
    if (plan.omit != static_cast<std::size_t>(-1)) {
        int rest = 0;
        for (std::size_t v = 0; v < kProjectiveVars; ++v) rest += m[v];
        int e = plan.omit_total - rest;
        if (e < 0 || e > 0xffff)
            throw std::logic_error("kronecker: reconstructed exponent out of range");
        m[plan.omit] = static_cast<std::uint16_t>(e);
    }
    return m;
}

MultiPoly mul_schoolbook(const MultiPoly& a, const MultiPoly& b) {
    std::vector<Term> prods;
    prods.reserve(a.terms().size() * b.terms().size());
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            Monomial m;
            for (std::size_t i = 0; i < kVarCount; ++i)
                m[i] = static_cast<std::uint16_t>(ta.mono[i] + tb.mono[i]);
            prods.push_back({m, ta.coeff * tb.coeff});
        }
    }
    return MultiPoly::from_terms(std::move(prods));
}

MultiPoly mul_hash(const MultiPoly& a, const MultiPoly& b) {
    // 10-bit exponent packing; products this sparse never get near 1024
    for (std::size_t v = 0; v < kVarCount; ++v)
        if (a.degree(v) + b.degree(v) >= 1024)
            throw Error("polynomial product too large for the sparse path");
    auto key = [](const Monomial& x, const Monomial& y) {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < kVarCount; ++i)
            k |= static_cast<std::uint64_t>(x[i] + y[i]) << (10 * i);
        return k;
    };
    std::unordered_map<std::uint64_t, BigInt> acc;
    acc.reserve(a.terms().size() * 4);
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms())
            acc[key(ta.mono, tb.mono)] += ta.coeff * tb.coeff;
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc) {
        if (c == 0) continue;
        Monomial m{};
        for (std::size_t i = 0; i < kVarCount; ++i)
            m[i] = static_cast<std::uint16_t>((k >> (10 * i)) & 0x3ff);
        out.push_back({m, std::move(c)});
    }
    return MultiPoly::from_terms(std::move(out));
}

MultiPoly mul_dense_addmul(const MultiPoly& a, const MultiPoly& b,
                           const MulPlan& plan) {
    std::vector<BigInt> acc(plan.slots);
    std::vector<std::uint64_t> akeys, bkeys;
    akeys.reserve(a.terms().size());
    bkeys.reserve(b.terms().size());
    for (const Term& t : a.terms()) akeys.push_back(plan_key(plan, t.mono));
    for (const Term& t : b.terms()) bkeys.push_back(plan_key(plan, t.mono));
    for (std::size_t i = 0; i < akeys.size(); ++i) {
        const BigInt& ca = a.terms()[i].coeff;
        for (std::size_t j = 0; j < bkeys.size(); ++j) {
            mpz_addmul(acc[akeys[i] + bkeys[j]].backend().data(),
                       ca.backend().data(),
                       b.terms()[j].coeff.backend().data());
        }
    }
    std::vector<Term> out;
    for (std::uint64_t s = 0; s < plan.slots; ++s)
        if (acc[s] != 0) out.push_back({plan_monomial(plan, s), std::move(acc[s])});
    return MultiPoly::from_terms(std::move(out));
}

// Packs both factors into single large integers with fixed-width slots and
// lets the integer multiplication (GMP's FFT at this size) do the work.
// Signed slot values are recovered with the usual offset trick.
MultiPoly mul_kronecker(const MultiPoly& a, const MultiPoly& b,
                        const MulPlan& plan) {
    std::size_t abits = 1, bbits = 1;
    for (const Term& t : a.terms()) abits = std::max(abits, bits_of(t.coeff));
    for (const Term& t : b.terms()) bbits = std::max(bbits, bits_of(t.coeff));
    std::size_t pair_bound =
        std::min(a.terms().size(), b.terms().size());
    std::size_t extra = 2;
    while ((1u << extra) < pair_bound) ++extra;
    std::size_t slot_bits = ((abits + bbits + extra + 2 + 63) / 64) * 64;
    const std::size_t w = slot_bits / 64;
    if (plan.slots * w > (1ull << 27))
        return mul_hash(a, b);  // memory guard; exact but slower

    const std::size_t words = plan.slots * w;
    std::vector<std::uint64_t> buf(words);
    auto pack = [&](const MultiPoly& p) {
        BigInt pos, neg;
        std::fill(buf.begin(), buf.end(), 0);
        bool any_pos = false;
        for (const Term& t : p.terms()) {
            if (t.coeff < 0) continue;
            any_pos = true;
            std::size_t cnt = 0;
            mpz_export(&buf[plan_key(plan, t.mono) * w], &cnt, -1, 8, 0, 0,
                       t.coeff.backend().data());
        }
        if (any_pos)
            mpz_import(pos.backend().data(), words, -1, 8, 0, 0, buf.data());
        std::fill(buf.begin(), buf.end(), 0);
        bool any_neg = false;
        for (const Term& t : p.terms()) {
            if (t.coeff >= 0) continue;
            any_neg = true;
            BigInt mag = -t.coeff;
            std::size_t cnt = 0;
            mpz_export(&buf[plan_key(plan, t.mono) * w], &cnt, -1, 8, 0, 0,
                       mag.backend().data());
        }
        if (any_neg)
            mpz_import(neg.backend().data(), words, -1, 8, 0, 0, buf.data());
        return BigInt(pos - neg);
    };

    BigInt r = pack(a) * pack(b);

    BigInt half = BigInt(1) << (slot_bits - 1);
    BigInt ones = ((BigInt(1) << (slot_bits * plan.slots)) - 1) /
                  ((BigInt(1) << slot_bits) - 1);
    BigInt shifted = r + half * ones;
    if (shifted < 0)
        throw std::logic_error("kronecker: slot width underestimated");
    std::fill(buf.begin(), buf.end(), 0);
    std::size_t cnt = 0;
    mpz_export(buf.data(), &cnt, -1, 8, 0, 0, shifted.backend().data());
    if (cnt > words) throw std::logic_error("kronecker: product overflow");

    std::vector<Term> out;
    BigInt val;
    for (std::uint64_t s = 0; s < plan.slots; ++s) {
        mpz_import(val.backend().data(), w, -1, 8, 0, 0, &buf[s * w]);
        val -= half;
        if (val != 0) out.push_back({plan_monomial(plan, s), val});
    }
    return MultiPoly::from_terms(std::move(out));
}

}  // namespace

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (terms_.size() == 1)
        return o.scaled_by_term(terms_[0].mono, terms_[0].coeff);
    if (o.terms_.size() == 1)
        return scaled_by_term(o.terms_[0].mono, o.terms_[0].coeff);

    const std::size_t pairs = terms_.size() * o.terms_.size();
    if (pairs <= 4096) return mul_schoolbook(*this, o);

    MulPlan plan = make_plan(*this, o, 1ull << 24);
    if (plan.slots == 0) return mul_hash(*this, o);
    if (pairs >= (1u << 18)) return mul_kronecker(*this, o, plan);
    if (plan.slots <= (1ull << 22) && plan.slots <= 16 * pairs)
        return mul_dense_addmul(*this, o, plan);
    return mul_hash(*this, o);
}

BigInt MultiPoly::content() const {
    if (terms_.empty()) return BigInt(0);
    BigInt g = 0;
    for (const Term& t : terms_) g = boost::multiprecision::gcd(g, t.coeff);
    if (terms_.front().coeff < 0) g = -g;
    return g;
}

MultiPoly MultiPoly::primitive_part() const {
    if (terms_.empty()) return {};
    BigInt c = content();
    MultiPoly p = *this;
    for (Term& t : p.terms_) t.coeff /= c;
    return p;
}

MultiPoly MultiPoly::specialize_param(const BigRational& value) const {
    int sdeg = degree(kParamVar);
    if (sdeg <= 0) {
        // already parameter-free
        return *this;
    }
    const BigInt p = num(value), q = den(value);
    std::vector<BigInt> ppow(static_cast<std::size_t>(sdeg) + 1),
        qpow(static_cast<std::size_t>(sdeg) + 1);
    ppow[0] = 1;
    qpow[0] = 1;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(sdeg); ++i) {
        ppow[i] = ppow[i - 1] * p;
        qpow[i] = qpow[i - 1] * q;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::size_t e = t.mono[kParamVar];
        Term nt = t;
        nt.mono[kParamVar] = 0;
        nt.coeff = t.coeff * ppow[e] * qpow[static_cast<std::size_t>(sdeg) - e];
        out.push_back(std::move(nt));
    }
    return from_terms(std::move(out));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : terms_) {
        BigInt a = abs(t.coeff);
        if (first) {
            if (t.coeff < 0) out << "-";
            first = false;
        } else {
            out << (t.coeff < 0 ? " - " : " + ");
        }
        bool has_var = false;
        for (std::uint16_t e : t.mono)
            if (e) has_var = true;
        if (a != 1 || !has_var) {
            out << a.str();
            if (has_var) out << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < kVarCount; ++v) {
            if (t.mono[v] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << kVarNames[v];
            if (t.mono[v] > 1) out << "^" << t.mono[v];
        }
    }
    return out.str();
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    if (a.is_zero()) return {};
    MultiPoly r = a;
    std::vector<Term> q;
    const Term& lb = b.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        Monomial m;
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (lr.mono[i] < lb.mono[i])
                throw std::logic_error("exact_divide: not divisible");
            m[i] = static_cast<std::uint16_t>(lr.mono[i] - lb.mono[i]);
        }
        if (lr.coeff % lb.coeff != 0)
            throw std::logic_error("exact_divide: not divisible");
        BigInt c = lr.coeff / lb.coeff;
        q.push_back({m, c});
        r = r - b.scaled_by_term(m, c);
    }
    return MultiPoly::from_terms(std::move(q));
}

namespace {

// --- recursive content / subresultant machinery --------------------------

int highest_active_var(const MultiPoly& a, const MultiPoly& b) {
    for (std::size_t v = kVarCount; v-- > 0;)
        if (a.uses_var(v) || b.uses_var(v)) return static_cast<int>(v);
    return -1;
}

// coefficient vector in variable v, index = power of v
std::vector<MultiPoly> to_var_coeffs(const MultiPoly& p, std::size_t v) {
    std::vector<std::vector<Term>> buckets(
        static_cast<std::size_t>(p.degree(v)) + 1);
    for (const Term& t : p.terms()) {
        Term nt = t;
        nt.mono[v] = 0;
        buckets[t.mono[v]].push_back(std::move(nt));
    }
    std::vector<MultiPoly> out(buckets.size());
    for (std::size_t i = 0; i < buckets.size(); ++i)
        out[i] = MultiPoly::from_terms(std::move(buckets[i]));
    return out;
}

MultiPoly from_var_coeffs(const std::vector<MultiPoly>& coeffs,
                          std::size_t v) {
    std::vector<Term> all;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (Term t : coeffs[i].terms()) {
            t.mono[v] = static_cast<std::uint16_t>(i);
            all.push_back(std::move(t));
        }
    }
    return MultiPoly::from_terms(std::move(all));
}

void trim(std::vector<MultiPoly>& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

// Pseudo-remainder of f1 by f2 in the variable the vectors are indexed by,
// normalized to the full lc(f2)^(deg f1 - deg f2 + 1) factor that the
// subresultant divisions below expect.
std::vector<MultiPoly> pseudo_rem_v(std::vector<MultiPoly> r,
                                    const std::vector<MultiPoly>& f2) {
    const std::size_t d2 = f2.size() - 1;
    const MultiPoly& lc2 = f2.back();
    int needed = static_cast<int>(r.size() - 1) - static_cast<int>(d2) + 1;
    int passes = 0;
    while (r.size() > d2 && !r.empty()) {
        MultiPoly lead = r.back();
        std::size_t shift = r.size() - 1 - d2;
        for (auto& c : r) c = c * lc2;
        for (std::size_t i = 0; i < d2; ++i)
            r[shift + i] = r[shift + i] - lead * f2[i];
        r.pop_back();  // the top coefficient cancels exactly
        trim(r);
        ++passes;
    }
    MultiPoly deficit = MultiPoly::constant(BigInt(1));
    for (int i = passes; i < needed; ++i) deficit = deficit * lc2;
    if (!(deficit == MultiPoly::constant(BigInt(1))))
        for (auto& c : r) c = c * deficit;
    return r;
}

MultiPoly pow_poly(const MultiPoly& p, std::size_t k) {
    MultiPoly r = MultiPoly::constant(BigInt(1));
    for (std::size_t i = 0; i < k; ++i) r = r * p;
    return r;
}

}  // namespace

MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b) {
    auto positive = [](MultiPoly p) {
        if (!p.is_zero() && p.leading().coeff < 0) return -p;
        return p;
    };
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);

    int vi = highest_active_var(a, b);
    if (vi < 0)
        return MultiPoly::constant(
            boost::multiprecision::gcd(a.leading().coeff, b.leading().coeff));
    std::size_t v = static_cast<std::size_t>(vi);

    std::vector<MultiPoly> av = to_var_coeffs(a, v), bv = to_var_coeffs(b, v);
    MultiPoly cont_a = multi_gcd_many(av), cont_b = multi_gcd_many(bv);
    for (auto& c : av) c = exact_divide(c, cont_a);
    for (auto& c : bv) c = exact_divide(c, cont_b);
    MultiPoly gcont = multi_gcd(cont_a, cont_b);

    std::vector<MultiPoly>*f1 = &av, *f2 = &bv;
    if (f1->size() < f2->size()) std::swap(f1, f2);
    MultiPoly g = MultiPoly::constant(BigInt(1));
    MultiPoly h = MultiPoly::constant(BigInt(1));
    std::vector<MultiPoly> cur1 = *f1, cur2 = *f2;
    MultiPoly prim;  // gcd of the primitive parts
    for (int guard = 0;; ++guard) {
        if (guard > 4096) throw std::logic_error("subresultant PRS diverged");
        std::size_t delta = cur1.size() - cur2.size();
        std::vector<MultiPoly> rem = pseudo_rem_v(cur1, cur2);
        if (rem.empty()) {
            MultiPoly f2cont = multi_gcd_many(cur2);
            for (auto& c : cur2) c = exact_divide(c, f2cont);
            prim = from_var_coeffs(cur2, v);
            break;
        }
        if (rem.size() == 1) {
            prim = MultiPoly::constant(BigInt(1));
            break;
        }
        MultiPoly divisor = g * pow_poly(h, delta);
        cur1 = std::move(cur2);
        cur2 = std::move(rem);
        for (auto& c : cur2) c = exact_divide(c, divisor);
        g = cur1.back();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_divide(pow_poly(g, delta), pow_poly(h, delta - 1));
    }
    return positive(gcont * prim);
}

MultiPoly multi_gcd_many(const std::vector<MultiPoly>& polys) {
    MultiPoly g;
    for (const MultiPoly& p : polys) {
        g = multi_gcd(g, p);
        if (!g.is_zero() && g.total_degree() == 0 && g.leading().coeff == 1)
            break;
    }
    return g;
}

namespace {

// --- coprimality certificate mod 2^61 - 1 ---------------------------------

using u64 = std::uint64_t;
constexpr u64 kPrime = 2305843009213693951ull;

u64 mulmod(u64 a, u64 b) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % kPrime);
}
u64 addmod(u64 a, u64 b) {
    u64 s = a + b;
    if (s >= kPrime) s -= kPrime;
    return s;
}
u64 submod(u64 a, u64 b) { return addmod(a, kPrime - b); }
u64 powmod(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

u64 reduce_coeff(const BigInt& c) {
    BigInt m = c % BigInt(kPrime);
    if (m < 0) m += kPrime;
    return m.convert_to<u64>();
}

struct ReducedPoly {
    std::vector<Monomial> monos;
    std::vector<u64> coeffs;
    int degree;
};

ReducedPoly reduce_poly(const MultiPoly& p) {
    ReducedPoly r;
    r.degree = p.projective_degree();
    for (const Term& t : p.terms()) {
        u64 c = reduce_coeff(t.coeff);
        if (c == 0) continue;
        r.monos.push_back(t.mono);
        r.coeffs.push_back(c);
    }
    return r;
}

u64 eval_reduced(const ReducedPoly& p, const std::array<u64, kVarCount>& pt,
                 int max_pow) {
    // power tables per coordinate
    std::array<std::vector<u64>, kVarCount> pows;
    for (std::size_t v = 0; v < kVarCount; ++v) {
        pows[v].resize(static_cast<std::size_t>(max_pow) + 1);
        pows[v][0] = 1;
        for (int e = 1; e <= max_pow; ++e)
            pows[v][e] = mulmod(pows[v][static_cast<std::size_t>(e - 1)], pt[v]);
    }
    u64 acc = 0;
    for (std::size_t i = 0; i < p.monos.size(); ++i) {
        u64 t = p.coeffs[i];
        for (std::size_t v = 0; v < kVarCount; ++v)
            if (p.monos[i][v]) t = mulmod(t, pows[v][p.monos[i][v]]);
        acc = addmod(acc, t);
    }
    return acc;
}

// interpolation through (i, values[i]) for i = 0..n
std::vector<u64> interpolate_mod(const std::vector<u64>& values) {
    const std::size_t n = values.size();
    // master(t) = prod (t - i)
    std::vector<u64> master(n + 1, 0);
    master[0] = 1;
    std::size_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // multiply by (t - i)
        for (std::size_t j = deg + 1; j-- > 0;) {
            u64 hi = master[j];
            master[j + 1] = addmod(master[j + 1], hi);
            master[j] = mulmod(hi, kPrime - (i % kPrime));
        }
        ++deg;
    }
    std::vector<u64> result(n, 0);
    std::vector<u64> quotient(n);
    for (std::size_t i = 0; i < n; ++i) {
        // quotient = master / (t - i), synthetic division
        u64 carry = 0;
        for (std::size_t j = n + 1; j-- > 1;) {
            carry = addmod(master[j], mulmod(carry, i % kPrime));
            quotient[j - 1] = carry;
        }
        // scale by values[i] / quotient(i)
        u64 qi = 0;
        for (std::size_t j = n; j-- > 0;) qi = addmod(mulmod(qi, i % kPrime), quotient[j]);
        u64 scale = mulmod(values[i], invmod(qi));
        for (std::size_t j = 0; j < n; ++j)
            result[j] = addmod(result[j], mulmod(quotient[j], scale));
    }
    return result;
}

void trim_mod(std::vector<u64>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b) {
    trim_mod(a);
    trim_mod(b);
    while (!b.empty()) {
        // a mod b
        u64 inv_lead = invmod(b.back());
        while (a.size() >= b.size()) {
            u64 f = mulmod(a.back(), inv_lead);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = submod(a[shift + i], mulmod(f, b[i]));
            trim_mod(a);
            if (a.size() <= shift) break;
        }
        std::swap(a, b);
        trim_mod(b);
    }
    return a;
}

}  // namespace

bool coprime_certificate(const std::vector<const MultiPoly*>& polys) {
    std::vector<ReducedPoly> reduced;
    for (const MultiPoly* p : polys) {
        if (p->is_zero()) continue;
        if (!p->is_projective_homogeneous() || p->uses_var(kParamVar))
            throw Error("coprime_certificate: inputs must be homogeneous and parameter-free");
        if (p->projective_degree() == 0) return true;  // unit in the span
        reduced.push_back(reduce_poly(*p));
    }
    if (reduced.size() < 2) return false;

    for (std::uint64_t attempt = 0; attempt < 3; ++attempt) {
        SplitMix64 rng(0x5bd1e995u + attempt * 0x9e3779b97f4a7c15ull);
        std::array<u64, kVarCount> base{}, dir{};
        for (std::size_t v = 0; v < kVarCount; ++v) {
            base[v] = rng.next() % kPrime;
            dir[v] = rng.next() % kPrime;
        }
        // pick the pivot: a component not vanishing at the direction point,
        // so its line restriction keeps full degree and any common factor
        // would stay visible
        int max_deg = 0;
        for (const auto& rp : reduced) max_deg = std::max(max_deg, rp.degree);
        std::size_t pivot = reduced.size();
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            if (eval_reduced(reduced[i], dir, max_deg) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == reduced.size()) continue;

        auto restrict_line = [&](const ReducedPoly& rp) {
            std::vector<u64> vals(static_cast<std::size_t>(rp.degree) + 1);
            for (std::size_t t = 0; t < vals.size(); ++t) {
                std::array<u64, kVarCount> pt{};
                for (std::size_t v = 0; v < kVarCount; ++v)
                    pt[v] = addmod(base[v], mulmod(static_cast<u64>(t), dir[v]));
                vals[t] = eval_reduced(rp, pt, rp.degree);
            }
            return interpolate_mod(vals);
        };

        std::vector<u64> g = restrict_line(reduced[pivot]);
        trim_mod(g);
        for (std::size_t i = 0; i < reduced.size() && g.size() > 1; ++i) {
            if (i == pivot) continue;
            g = gcd_mod(std::move(g), restrict_line(reduced[i]));
        }
        if (g.size() == 1) return true;
    }
    return false;
}

std::vector<MultiPoly> substitute_many(const std::vector<MultiPoly>& fs,
                                       const std::vector<MultiPoly>& args) {
    for (const MultiPoly& f : fs) {
        if (f.uses_var(kParamVar))
            throw Error("substitute: polynomial still depends on the parameter");
        for (std::size_t v = args.size(); v < kProjectiveVars; ++v)
            if (f.uses_var(v))
                throw Error(
                    "substitute: not enough arguments for the variables used");
    }

    // power cache shared by every monomial of every polynomial
    std::array<std::vector<MultiPoly>, kProjectiveVars> pows;
    for (std::size_t v = 0; v < args.size() && v < kProjectiveVars; ++v) {
        int d = -1;
        for (const MultiPoly& f : fs) d = std::max(d, f.degree(v));
        if (d < 1) continue;
        pows[v].resize(static_cast<std::size_t>(d) + 1);
        pows[v][1] = args[v];
        for (int e = 2; e <= d; ++e)
            pows[v][static_cast<std::size_t>(e)] =
                pows[v][static_cast<std::size_t>(e - 1)] * args[v];
    }

    // one product per distinct monomial, shared across polynomials
    std::map<Monomial, MultiPoly> prod_cache;
    std::vector<MultiPoly> results;
    results.reserve(fs.size());
    for (const MultiPoly& f : fs) {
        std::vector<Term> out;
        for (const Term& t : f.terms()) {
            auto it = prod_cache.find(t.mono);
            if (it == prod_cache.end()) {
                std::vector<const MultiPoly*> factors;
                for (std::size_t v = 0; v < kProjectiveVars; ++v)
                    if (t.mono[v]) factors.push_back(&pows[v][t.mono[v]]);
                MultiPoly prod = MultiPoly::constant(BigInt(1));
                std::sort(factors.begin(), factors.end(),
                          [](const MultiPoly* a, const MultiPoly* b) {
                              return a->terms().size() < b->terms().size();
                          });
                for (const MultiPoly* m : factors) prod = prod * *m;
                it = prod_cache.emplace(t.mono, std::move(prod)).first;
            }
            for (const Term& pt : it->second.terms())
                out.push_back({pt.mono, pt.coeff * t.coeff});
        }
        results.push_back(MultiPoly::from_terms(std::move(out)));
    }
    return results;
}

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& args) {
    return substitute_many({f}, args)[0];
}

}  // namespace cremona
