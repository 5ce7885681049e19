#include "cremona/rational_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/map_parse.hpp"

namespace cremona {

namespace {

std::vector<const MultiPoly*> nonzero_of(const std::vector<MultiPoly>& comps) {
    std::vector<const MultiPoly*> nz;
    for (const MultiPoly& c : comps)
        if (!c.is_zero()) nz.push_back(&c);
    return nz;
}

// shared validation for plain maps and families
std::int64_t validate_components(const std::vector<MultiPoly>& comps,
                                 bool allow_param) {
    if (comps.size() < 2 || comps.size() > kProjectiveVars)
        throw Error("a map needs 2 to 5 components");
    std::size_t ambient = comps.size() - 1;
    std::int64_t degree = -1;
    bool any = false;
    for (const MultiPoly& c : comps) {
        if (!allow_param && c.uses_var(kParamVar))
            throw Error("map components must not involve the parameter s");
        for (std::size_t v = ambient + 1; v < kProjectiveVars; ++v)
            if (c.uses_var(v))
                throw Error(std::string("component uses variable '") +
                            kVarNames[v] + "' outside P^" +
                            std::to_string(ambient));
        if (c.is_zero()) continue;
        any = true;
        if (!c.is_projective_homogeneous())
            throw Error("map components must be homogeneous");
        if (degree < 0)
            degree = c.projective_degree();
        else if (degree != c.projective_degree())
            throw Error("map components must share one degree");
    }
    if (!any) throw Error("a map needs at least one nonzero component");
    return degree;
}

}  // namespace

RationalMapPn::RationalMapPn(std::vector<MultiPoly> components)
    : comps_(std::move(components)) {
    degree_ = validate_components(comps_, false);

    // integer content first; the mod-p coprimality certificate only sees
    // polynomial factors
    std::vector<const MultiPoly*> nz = nonzero_of(comps_);
    BigInt ic = 0;
    for (const MultiPoly* c : nz) ic = gcd(ic, abs(c->content()));
    if (ic > 1)
        for (MultiPoly& c : comps_)
            c = exact_divide(c, MultiPoly::constant(ic));

    nz = nonzero_of(comps_);
    if (degree_ > 0 && (nz.size() < 2 || !coprime_certificate(nz))) {
        std::vector<MultiPoly> polys;
        for (const MultiPoly* c : nz) polys.push_back(*c);
        MultiPoly g = multi_gcd_many(polys);
        if (g.total_degree() > 0 || g.leading().coeff != 1) {
            for (MultiPoly& c : comps_) c = exact_divide(c, g);
            degree_ -= g.projective_degree();
        }
    }

    for (const MultiPoly& c : comps_) {
        if (c.is_zero()) continue;
        if (c.leading().coeff < 0)
            for (MultiPoly& d : comps_) d = -d;
        break;
    }
}

RationalMapPn RationalMapPn::parse(const std::string& text) {
    return RationalMapPn(parse_map_components(text, false));
}

RationalMapPn RationalMapPn::identity(std::size_t ambient) {
    if (ambient < 1 || ambient + 1 > kProjectiveVars)
        throw Error("identity map needs P^1 through P^4");
    std::vector<MultiPoly> comps;
    for (std::size_t v = 0; v <= ambient; ++v)
        comps.push_back(MultiPoly::variable(v));
    return RationalMapPn(std::move(comps));
}

std::string RationalMapPn::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out << " : ";
        out << comps_[i].to_string();
    }
    out << "]";
    return out.str();
}

RationalMapPn compose(const RationalMapPn& f, const RationalMapPn& g) {
    if (f.ambient() != g.ambient())
        throw Error("cannot compose maps of different ambient spaces");
    std::vector<MultiPoly> comps =
        substitute_many(f.components(), g.components());
    bool any = false;
    for (const MultiPoly& c : comps) any = any || !c.is_zero();
    if (!any)
        throw Error("composite map vanishes identically");
    return RationalMapPn(std::move(comps));
}

DegreeSequence iterate_degrees(const RationalMapPn& f,
                               std::size_t max_iterates,
                               std::int64_t degree_cap) {
    if (max_iterates < 1) throw Error("need at least one iterate");
    if (degree_cap < 1) throw Error("degree cap must be positive");

    DegreeSequence seq;
    seq.degrees.push_back(1);  // f^0
    if (f.degree() > degree_cap) {
        seq.capped = true;
        return seq;
    }
    RationalMapPn cur = f;
    seq.degrees.push_back(f.degree());
    for (std::size_t k = 2; k <= max_iterates; ++k) {
        // a composition never exceeds the degree product, so this bound is
        // safe to check before doing the work
        if (seq.degrees.back() * f.degree() > degree_cap) {
            seq.capped = true;
            break;
        }
        cur = compose(f, cur);
        seq.degrees.push_back(cur.degree());
    }

    // growth enclosure: exact final ratio bracketed against the slope of a
    // log-linear fit; both land in [min, max]
    const auto& d = seq.degrees;
    bool positive = std::all_of(d.begin(), d.end(),
                                [](std::int64_t x) { return x > 0; });
    if (d.size() >= 3 && positive) {
        BigRational last_ratio(d.back(), d[d.size() - 2]);
        double n = static_cast<double>(d.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < d.size(); ++k) {
            double x = static_cast<double>(k);
            double y = std::log(static_cast<double>(d[k]));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        double fit = std::exp(slope);
        BigRational fit_q(BigInt(std::llround(fit * 1e12)), BigInt(1000000000000LL));
        RadiusEstimate est;
        est.method = RadiusMethod::GrowthRatio;
        est.lower = std::min(last_ratio, fit_q);
        est.upper = std::max(last_ratio, fit_q);
        seq.growth = est;
    }
    return seq;
}

SubmultiplicativityReport submultiplicativity_check(const RationalMapPn& f,
                                                    const RationalMapPn& g) {
    SubmultiplicativityReport r;
    r.composite = compose(f, g).degree();
    r.product = f.degree() * g.degree();
    r.holds = r.composite <= r.product;
    return r;
}

std::int64_t orbit_closure_degree(const std::vector<std::int64_t>& exponents,
                                  std::size_t ambient) {
    if (ambient < 1 || ambient + 1 > kProjectiveVars)
        throw Error("orbit closure lives in P^1 through P^4");
    if (exponents.size() != ambient)
        throw Error("need exactly one exponent per affine coordinate");
    std::int64_t hi = 0, lo = 0;
    bool any = false;
    for (std::int64_t e : exponents) {
        any = any || e != 0;
        hi = std::max(hi, e);
        lo = std::min(lo, e);
    }
    if (!any) throw Error("orbit of a fixed point has no closure degree");
    return hi - lo;
}

ParametricMap::ParametricMap(std::vector<MultiPoly> components)
    : comps_(std::move(components)) {
    degree_ = validate_components(comps_, true);
}

ParametricMap ParametricMap::parse(const std::string& text) {
    return ParametricMap(parse_map_components(text, true));
}

Specialization specialize(const ParametricMap& family, const BigRational& s0) {
    std::vector<MultiPoly> comps;
    std::size_t vanished = 0, family_nonzero = 0;
    for (const MultiPoly& c : family.components()) {
        comps.push_back(c.specialize_param(s0));
        if (!c.is_zero()) {
            ++family_nonzero;
            if (comps.back().is_zero()) ++vanished;
        }
    }
    Specialization out;
    if (vanished == family_nonzero) {
        out.degenerate = true;
        return out;
    }
    out.map = RationalMapPn(std::move(comps));
    out.degenerate =
        vanished > 0 || out.map->degree() < family.family_degree();
    return out;
}

std::vector<ScanRow> family_degree_scan(const ParametricMap& family,
                                        const std::vector<BigRational>& grid,
                                        std::size_t iterate,
                                        std::int64_t degree_cap) {
    if (iterate < 1) throw Error("scan iterate must be at least 1");
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (const BigRational& s : grid) {
        ScanRow row;
        row.s = s;
        Specialization sp = specialize(family, s);
        row.degenerate = sp.degenerate;
        if (sp.map) {
            DegreeSequence seq = iterate_degrees(*sp.map, iterate, degree_cap);
            row.capped = seq.capped;
            if (!seq.capped && seq.degrees.size() > iterate)
                row.degree = seq.degrees[iterate];
            else if (!seq.degrees.empty())
                row.degree = seq.degrees.back();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace cremona
