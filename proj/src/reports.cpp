#include "cremona/reports.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cremona/companion.hpp"
#include "cremona/errors.hpp"
#include "cremona/ledger.hpp"
#include "cremona/map_parse.hpp"
#include "cremona/rational_map.hpp"
#include "cremona/recursion.hpp"
#include "cremona/successor.hpp"

namespace cremona {

using json = nlohmann::ordered_json;

IntervalOut make_interval(const RadiusEstimate& est) {
    IntervalOut out;
    out.lower = rational_to_string(est.lower);
    out.upper = rational_to_string(est.upper);
    out.midpoint = to_double((est.lower + est.upper) / 2);
    out.method = to_string(est.method);
    return out;
}

bool ReflectReport::needs_attention() const {
    return realizability_violation.has_value() || growth_error.has_value();
}

ReflectReport build_reflect_report(const std::string& tau_spec,
                                   std::uint64_t steps,
                                   const BigRational& tol,
                                   std::uint64_t seed) {
    SuccessorFunction tau = SuccessorFunction::parse(tau_spec);
    ReflectReport rep;
    rep.tau = tau.to_spec();
    rep.steps = steps;
    rep.tolerance = rational_to_string(tol);
    rep.seed = seed;

    DegreeTrace trace = run_recursion(tau, steps);
    for (const BigInt& v : trace.d1) rep.d1.push_back(v.str());
    for (const BigInt& v : trace.d2) rep.d2.push_back(v.str());
    for (const BigInt& v : trace.t1) rep.t1.push_back(v.str());
    for (const BigInt& v : trace.t2) rep.t2.push_back(v.str());
    rep.equality = check_equality(trace);
    if (auto bad = check_realizability(trace))
        rep.realizability_violation = *bad;

    DynamicalDegreeReport dd = dynamical_degree_report(tau, tol);
    rep.period_constant = dd.C.str();
    rep.spectral = make_interval(dd.spectral);
    rep.empirical = dd.empirical;
    rep.agree = dd.agree;

    // growth classification wants a long enough trace to certify the
    // minimal recurrence; extend internally rather than failing on the
    // user's display step count
    std::size_t C = dd.C.convert_to<std::size_t>();
    std::size_t classify_steps = std::max<std::size_t>(
        steps, std::max<std::size_t>(4 * C, 2 * C + 3));
    try {
        DegreeTrace deep = classify_steps == steps
                               ? trace
                               : run_recursion(tau, classify_steps);
        GrowthClass g = classify_growth(deep, tau, tol);
        switch (g.kind) {
            case GrowthClass::Kind::Bounded:
                rep.growth_kind = "bounded";
                break;
            case GrowthClass::Kind::Polynomial:
                rep.growth_kind = "polynomial";
                rep.growth_degree = g.degree;
                break;
            case GrowthClass::Kind::Exponential:
                rep.growth_kind = "exponential";
                break;
        }
        if (g.rate) rep.growth_rate = make_interval(*g.rate);
    } catch (const Error& e) {
        rep.growth_kind = "uncertified";
        rep.growth_error = e.what();
    }
    return rep;
}

ComposeReport build_compose_report(const std::vector<std::string>& map_texts,
                                   std::uint64_t iterations,
                                   std::int64_t degree_cap,
                                   std::uint64_t seed) {
    if (map_texts.empty()) throw Error("compose needs at least one map");
    std::vector<RationalMapPn> maps;
    for (const std::string& text : map_texts)
        maps.push_back(RationalMapPn::parse(text));

    ComposeReport rep;
    for (const RationalMapPn& m : maps) rep.maps.push_back(m.to_string());
    rep.iterations = iterations;
    rep.degree_cap = degree_cap;
    rep.seed = seed;

    DegreeSequence seq = iterate_degrees(maps[0], iterations, degree_cap);
    rep.degrees = seq.degrees;
    rep.capped = seq.capped;
    if (seq.growth) rep.growth = make_interval(*seq.growth);

    for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
        SubmultiplicativityReport s =
            submultiplicativity_check(maps[i], maps[i + 1]);
        rep.submultiplicativity.push_back(
            {i, i + 1, s.composite, s.product, s.holds});
    }
    return rep;
}

bool ScanReport::needs_attention() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const ScanRowOut& r) { return r.capped; });
}

ScanReport build_scan_report(const std::string& family_text,
                             const std::string& grid_text,
                             std::uint64_t iterate, std::int64_t degree_cap,
                             std::uint64_t seed) {
    ParametricMap family = ParametricMap::parse(family_text);
    std::vector<BigRational> grid = parse_grid(grid_text);

    ScanReport rep;
    {
        std::ostringstream fam;
        fam << "[";
        for (std::size_t i = 0; i < family.components().size(); ++i) {
            if (i) fam << " : ";
            fam << family.components()[i].to_string();
        }
        fam << "]";
        rep.family = fam.str();
    }
    rep.grid = grid_text;
    rep.iterate = iterate;
    rep.degree_cap = degree_cap;
    rep.seed = seed;

    for (const ScanRow& row :
         family_degree_scan(family, grid, iterate, degree_cap)) {
        rep.rows.push_back({rational_to_string(row.s), row.degree,
                            row.degenerate, row.capped});
    }
    return rep;
}

LedgerReport build_ledger_report(const std::string& script_text,
                                 std::uint64_t seed) {
    LedgerScript script = parse_event_script(script_text);
    LedgerReport rep;
    rep.seed = seed;
    SignatureLedger l = script.initial;
    rep.rows.push_back(
        {"start", l.profile.h11, l.profile.h22, l.n_plus, l.n_minus});
    bool ok = check_formula(l);
    for (const BlowupEvent& e : script.events) {
        l = apply_blowup(l, e);
        ok = ok && check_formula(l);
        rep.rows.push_back(
            {e.label(), l.profile.h11, l.profile.h22, l.n_plus, l.n_minus});
    }
    rep.formula_ok = ok;
    return rep;
}

// --- JSON --------------------------------------------------------------

namespace {

json interval_to_json(const IntervalOut& i) {
    return json{{"lower", i.lower},
                {"upper", i.upper},
                {"midpoint", i.midpoint},
                {"method", i.method}};
}

IntervalOut interval_from_json(const json& j) {
    IntervalOut i;
    i.lower = j.at("lower").get<std::string>();
    i.upper = j.at("upper").get<std::string>();
    i.midpoint = j.at("midpoint").get<double>();
    i.method = j.at("method").get<std::string>();
    return i;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json_string(const ReflectReport& r) {
    json j;
    j["command"] = "reflect";
    j["tau"] = r.tau;
    j["steps"] = r.steps;
    j["tolerance"] = r.tolerance;
    j["seed"] = r.seed;
    j["period_constant"] = r.period_constant;
    j["trace"] = {{"d1", r.d1}, {"d2", r.d2}, {"t1", r.t1}, {"t2", r.t2}};
    j["equality"] = r.equality;
    j["realizability_violation"] =
        r.realizability_violation ? json(*r.realizability_violation)
                                  : json(nullptr);
    j["spectral"] = interval_to_json(r.spectral);
    j["empirical"] = r.empirical ? json(*r.empirical) : json(nullptr);
    j["agree"] = r.agree;
    j["growth"] = {{"kind", r.growth_kind},
                   {"degree", r.growth_degree},
                   {"rate", r.growth_rate ? interval_to_json(*r.growth_rate)
                                          : json(nullptr)},
                   {"error", r.growth_error ? json(*r.growth_error)
                                            : json(nullptr)}};
    return dump(j);
}

ReflectReport reflect_report_from_json(const std::string& text) {
    json j = json::parse(text);
    ReflectReport r;
    r.tau = j.at("tau").get<std::string>();
    r.steps = j.at("steps").get<std::uint64_t>();
    r.tolerance = j.at("tolerance").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.period_constant = j.at("period_constant").get<std::string>();
    const json& t = j.at("trace");
    r.d1 = t.at("d1").get<std::vector<std::string>>();
    r.d2 = t.at("d2").get<std::vector<std::string>>();
    r.t1 = t.at("t1").get<std::vector<std::string>>();
    r.t2 = t.at("t2").get<std::vector<std::string>>();
    r.equality = j.at("equality").get<bool>();
    if (!j.at("realizability_violation").is_null())
        r.realizability_violation =
            j.at("realizability_violation").get<std::uint64_t>();
    r.spectral = interval_from_json(j.at("spectral"));
    if (!j.at("empirical").is_null())
        r.empirical = j.at("empirical").get<double>();
    r.agree = j.at("agree").get<bool>();
    const json& g = j.at("growth");
    r.growth_kind = g.at("kind").get<std::string>();
    r.growth_degree = g.at("degree").get<std::uint64_t>();
    if (!g.at("rate").is_null()) r.growth_rate = interval_from_json(g.at("rate"));
    if (!g.at("error").is_null())
        r.growth_error = g.at("error").get<std::string>();
    return r;
}

std::string to_json_string(const ComposeReport& r) {
    json j;
    j["command"] = "compose";
    j["maps"] = r.maps;
    j["iterations"] = r.iterations;
    j["degree_cap"] = r.degree_cap;
    j["seed"] = r.seed;
    j["degrees"] = r.degrees;
    j["growth"] = r.growth ? interval_to_json(*r.growth) : json(nullptr);
    j["capped"] = r.capped;
    json table = json::array();
    for (const SubmultRow& row : r.submultiplicativity)
        table.push_back(json{{"f", row.f_index},
                             {"g", row.g_index},
                             {"composite", row.composite},
                             {"product", row.product},
                             {"holds", row.holds}});
    j["submultiplicativity"] = table;
    return dump(j);
}

ComposeReport compose_report_from_json(const std::string& text) {
    json j = json::parse(text);
    ComposeReport r;
    r.maps = j.at("maps").get<std::vector<std::string>>();
    r.iterations = j.at("iterations").get<std::uint64_t>();
    r.degree_cap = j.at("degree_cap").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.degrees = j.at("degrees").get<std::vector<std::int64_t>>();
    if (!j.at("growth").is_null())
        r.growth = interval_from_json(j.at("growth"));
    r.capped = j.at("capped").get<bool>();
    for (const json& row : j.at("submultiplicativity"))
        r.submultiplicativity.push_back({row.at("f").get<std::uint64_t>(),
                                         row.at("g").get<std::uint64_t>(),
                                         row.at("composite").get<std::int64_t>(),
                                         row.at("product").get<std::int64_t>(),
                                         row.at("holds").get<bool>()});
    return r;
}

std::string to_json_string(const ScanReport& r) {
    json j;
    j["command"] = "scan";
    j["family"] = r.family;
    j["grid"] = r.grid;
    j["iterate"] = r.iterate;
    j["degree_cap"] = r.degree_cap;
    j["seed"] = r.seed;
    json rows = json::array();
    for (const ScanRowOut& row : r.rows)
        rows.push_back(json{{"s", row.s},
                            {"degree", row.degree},
                            {"degenerate", row.degenerate},
                            {"capped", row.capped}});
    j["rows"] = rows;
    return dump(j);
}

ScanReport scan_report_from_json(const std::string& text) {
    json j = json::parse(text);
    ScanReport r;
    r.family = j.at("family").get<std::string>();
    r.grid = j.at("grid").get<std::string>();
    r.iterate = j.at("iterate").get<std::uint64_t>();
    r.degree_cap = j.at("degree_cap").get<std::int64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const json& row : j.at("rows"))
        r.rows.push_back({row.at("s").get<std::string>(),
                          row.at("degree").get<std::int64_t>(),
                          row.at("degenerate").get<bool>(),
                          row.at("capped").get<bool>()});
    return r;
}

std::string to_json_string(const LedgerReport& r) {
    json j;
    j["command"] = "ledger";
    j["seed"] = r.seed;
    json rows = json::array();
    for (const LedgerRowOut& row : r.rows)
        rows.push_back(json{{"event", row.event},
                            {"h11", row.h11},
                            {"h22", row.h22},
                            {"n_plus", row.n_plus},
                            {"n_minus", row.n_minus}});
    j["rows"] = rows;
    j["formula_ok"] = r.formula_ok;
    return dump(j);
}

LedgerReport ledger_report_from_json(const std::string& text) {
    json j = json::parse(text);
    LedgerReport r;
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const json& row : j.at("rows"))
        r.rows.push_back({row.at("event").get<std::string>(),
                          row.at("h11").get<std::int64_t>(),
                          row.at("h22").get<std::int64_t>(),
                          row.at("n_plus").get<std::int64_t>(),
                          row.at("n_minus").get<std::int64_t>()});
    r.formula_ok = j.at("formula_ok").get<bool>();
    return r;
}

// --- CSV -----------------------------------------------------------------

std::string to_csv(const ReflectReport& r) {
    std::ostringstream out;
    out << "step,d1,d2,t1,t2\n";
    for (std::size_t i = 0; i < r.d1.size(); ++i)
        out << i << "," << r.d1[i] << "," << r.d2[i] << "," << r.t1[i] << ","
            << r.t2[i] << "\n";
    return out.str();
}

std::string to_csv(const ComposeReport& r) {
    std::ostringstream out;
    out << "iterate,degree\n";
    for (std::size_t k = 0; k < r.degrees.size(); ++k)
        out << k << "," << r.degrees[k] << "\n";
    return out.str();
}

std::string to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "s,degree,degenerate,capped\n";
    for (const ScanRowOut& row : r.rows)
        out << row.s << "," << row.degree << "," << (row.degenerate ? 1 : 0)
            << "," << (row.capped ? 1 : 0) << "\n";
    return out.str();
}

std::string to_csv(const LedgerReport& r) {
    std::ostringstream out;
    out << "step,event,h11,h22,n_plus,n_minus\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        out << i << "," << r.rows[i].event << "," << r.rows[i].h11 << ","
            << r.rows[i].h22 << "," << r.rows[i].n_plus << ","
            << r.rows[i].n_minus << "\n";
    return out.str();
}

// --- text ------------------------------------------------------------------

namespace {

std::string interval_text(const IntervalOut& i) {
    return "[" + i.lower + ", " + i.upper + "] ~ " +
           format_significant(i.midpoint, 12) + " (" + i.method + ")";
}

}  // namespace

std::string to_text(const ReflectReport& r) {
    std::ostringstream out;
    out << "tau: " << r.tau << "\n";
    out << "steps: " << r.steps << "  C: " << r.period_constant
        << "  tolerance: " << r.tolerance << "\n";
    out << "twin traces equal: " << (r.equality ? "yes" : "NO") << "\n";
    if (r.realizability_violation)
        out << "realizability violated at step " << *r.realizability_violation
            << "\n";
    else
        out << "realizability: ok\n";
    out << "spectral radius: " << interval_text(r.spectral) << "\n";
    if (r.empirical)
        out << "empirical rate: " << format_significant(*r.empirical, 12)
            << (r.agree ? " (agrees)" : " (differs; bounded or polynomial "
                                        "traces have no pointwise rate)")
            << "\n";
    else
        out << "empirical rate: unavailable\n";
    out << "growth: " << r.growth_kind;
    if (r.growth_kind == "polynomial") out << " degree " << r.growth_degree;
    if (r.growth_rate) out << ", rate " << interval_text(*r.growth_rate);
    if (r.growth_error) out << " (" << *r.growth_error << ")";
    out << "\n";
    out << "step,d1,d2,t1,t2\n";
    for (std::size_t i = 0; i < r.d1.size(); ++i)
        out << i << "," << r.d1[i] << "," << r.d2[i] << "," << r.t1[i] << ","
            << r.t2[i] << "\n";
    return out.str();
}

std::string to_text(const ComposeReport& r) {
    std::ostringstream out;
    out << "maps:\n";
    for (std::size_t i = 0; i < r.maps.size(); ++i)
        out << "  " << i << ": " << r.maps[i] << "\n";
    out << "degrees of map 0:";
    for (std::int64_t d : r.degrees) out << " " << d;
    out << (r.capped ? "  (capped at " + std::to_string(r.degree_cap) + ")"
                     : "")
        << "\n";
    if (r.growth) out << "growth rate: " << interval_text(*r.growth) << "\n";
    for (const SubmultRow& row : r.submultiplicativity)
        out << "deg(m" << row.f_index << " o m" << row.g_index
            << ") = " << row.composite << " <= " << row.product
            << " = deg m" << row.f_index << " * deg m" << row.g_index << ": "
            << (row.holds ? "ok" : "VIOLATED") << "\n";
    return out.str();
}

std::string to_text(const ScanReport& r) {
    std::ostringstream out;
    out << "family: " << r.family << "\n";
    out << "grid: " << r.grid << "  iterate: " << r.iterate << "\n";
    out << to_csv(r);
    return out.str();
}

std::string to_text(const LedgerReport& r) {
    std::ostringstream out;
    out << to_csv(r);
    out << "signature formula: " << (r.formula_ok ? "holds" : "VIOLATED")
        << "\n";
    return out.str();
}

}  // namespace cremona
