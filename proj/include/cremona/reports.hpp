#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/numeric.hpp"
#include "cremona/roots.hpp"

namespace cremona {

/// Serialized enclosure: exact rational endpoints plus a convenience
/// midpoint. The midpoint is derived output, never used for math.
struct IntervalOut {
    std::string lower;
    std::string upper;
    double midpoint = 0.0;
    std::string method;

    bool operator==(const IntervalOut&) const = default;
};

IntervalOut make_interval(const RadiusEstimate& est);

/// Everything the reflect command reports for one successor function.
struct ReflectReport {
    std::string tau;
    std::uint64_t steps = 0;
    std::string tolerance;
    std::uint64_t seed = 0;
    std::string period_constant;
    std::vector<std::string> d1, d2, t1, t2;
    bool equality = false;
    std::optional<std::uint64_t> realizability_violation;
    IntervalOut spectral;
    std::optional<double> empirical;
    bool agree = false;
    std::string growth_kind;  // bounded | polynomial | exponential
    std::uint64_t growth_degree = 0;
    std::optional<IntervalOut> growth_rate;
    std::optional<std::string> growth_error;

    bool operator==(const ReflectReport&) const = default;
    /// True when something deserves a warning exit: a realizability
    /// violation or an uncertified growth class.
    bool needs_attention() const;
};

ReflectReport build_reflect_report(const std::string& tau_spec,
                                   std::uint64_t steps,
                                   const BigRational& tol, std::uint64_t seed);

struct SubmultRow {
    std::uint64_t f_index = 0;
    std::uint64_t g_index = 0;
    std::int64_t composite = 0;
    std::int64_t product = 0;
    bool holds = false;

    bool operator==(const SubmultRow&) const = default;
};

/// Degree sequence of the first listed map plus a submultiplicativity row
/// for each consecutive pair of listed maps.
struct ComposeReport {
    std::vector<std::string> maps;  // canonical forms
    std::uint64_t iterations = 0;
    std::int64_t degree_cap = 0;
    std::uint64_t seed = 0;
    std::vector<std::int64_t> degrees;
    std::optional<IntervalOut> growth;
    bool capped = false;
    std::vector<SubmultRow> submultiplicativity;

    bool operator==(const ComposeReport&) const = default;
    bool needs_attention() const { return capped; }
};

ComposeReport build_compose_report(const std::vector<std::string>& map_texts,
                                   std::uint64_t iterations,
                                   std::int64_t degree_cap,
                                   std::uint64_t seed);

struct ScanRowOut {
    std::string s;  // exact rational
    std::int64_t degree = 0;
    bool degenerate = false;
    bool capped = false;

    bool operator==(const ScanRowOut&) const = default;
};

struct ScanReport {
    std::string family;  // family text as parsed back out
    std::string grid;
    std::uint64_t iterate = 0;
    std::int64_t degree_cap = 0;
    std::uint64_t seed = 0;
    std::vector<ScanRowOut> rows;

    bool operator==(const ScanReport&) const = default;
    bool needs_attention() const;
};

ScanReport build_scan_report(const std::string& family_text,
                             const std::string& grid_text,
                             std::uint64_t iterate, std::int64_t degree_cap,
                             std::uint64_t seed);

struct LedgerRowOut {
    std::string event;  // "start" for the initial row
    std::int64_t h11 = 0;
    std::int64_t h22 = 0;
    std::int64_t n_plus = 0;
    std::int64_t n_minus = 0;

    bool operator==(const LedgerRowOut&) const = default;
};

struct LedgerReport {
    std::uint64_t seed = 0;
    std::vector<LedgerRowOut> rows;
    bool formula_ok = false;

    bool operator==(const LedgerReport&) const = default;
    bool needs_attention() const { return !formula_ok; }
};

LedgerReport build_ledger_report(const std::string& script_text,
                                 std::uint64_t seed);

// Emitters. JSON output re-parses to an equal report; CSV carries the
// primary table of each report with '.' decimals and exact p/q rationals;
// text is the human-readable summary.
std::string to_json_string(const ReflectReport&);
std::string to_json_string(const ComposeReport&);
std::string to_json_string(const ScanReport&);
std::string to_json_string(const LedgerReport&);

ReflectReport reflect_report_from_json(const std::string&);
ComposeReport compose_report_from_json(const std::string&);
ScanReport scan_report_from_json(const std::string&);
LedgerReport ledger_report_from_json(const std::string&);

std::string to_csv(const ReflectReport&);
std::string to_csv(const ComposeReport&);
std::string to_csv(const ScanReport&);
std::string to_csv(const LedgerReport&);

std::string to_text(const ReflectReport&);
std::string to_text(const ComposeReport&);
std::string to_text(const ScanReport&);
std::string to_text(const LedgerReport&);

}  // namespace cremona
