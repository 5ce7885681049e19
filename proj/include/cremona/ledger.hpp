#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

struct HodgeProfile {
    std::int64_t h11 = 0;
    std::int64_t h22 = 0;

    bool operator==(const HodgeProfile&) const = default;
};

/// Blow-up of a point, a curve, or a surface inside a fourfold. Only
/// h^{1,1} of a surface center matters for the middle-cohomology deltas.
struct BlowupEvent {
    enum class Kind { Point, Curve, Surface };

    Kind kind = Kind::Point;
    std::int64_t surface_h11 = 0;  // Surface only, >= 1

    static BlowupEvent point() { return {Kind::Point, 0}; }
    static BlowupEvent curve() { return {Kind::Curve, 0}; }
    static BlowupEvent surface(std::int64_t h11_s);

    /// Number of basis classes the event adds to the degree-4 cohomology.
    std::int64_t rank_delta() const;
    std::string label() const;

    bool operator==(const BlowupEvent&) const = default;
};

/// One added basis class: what was cut on the exceptional divisor and the
/// sign it contributes to the intersection form. Convention: the single
/// negative class of every event carries H_E^2; positive classes carry H_E
/// (times a pulled-back center class for surface events).
struct BasisClassLabel {
    std::string description;
    int hyperplane_power = 0;
    int sign = 0;

    bool operator==(const BasisClassLabel&) const = default;
};

struct LedgerStep {
    BlowupEvent event;
    std::vector<BasisClassLabel> added;

    bool operator==(const LedgerStep&) const = default;
};

/// Signature bookkeeping for the degree-4 intersection form along a tower
/// of blow-ups. Values are immutable; apply_blowup returns a new ledger.
struct SignatureLedger {
    HodgeProfile profile;
    std::int64_t n_plus = 0;
    std::int64_t n_minus = 0;
    std::vector<LedgerStep> history;

    bool operator==(const SignatureLedger&) const = default;
};

enum class LedgerPreset { CubicFourfold, P4 };

/// h^{2,2} of a smooth cubic fourfold, recomputed from the Jacobian-ring
/// monomial count instead of being hard-coded.
std::int64_t cubic_fourfold_h22();

/// Fresh ledger; n_plus/n_minus follow the signature formula
/// h22 - 2*h11 + 2. Throws Error when a custom profile makes the counts
/// non-integral or negative.
SignatureLedger new_ledger(LedgerPreset preset);
SignatureLedger new_ledger_custom(std::int64_t h11, std::int64_t h22);

SignatureLedger apply_blowup(const SignatureLedger& ledger,
                             const BlowupEvent& event);

/// True iff the incremental counts still satisfy the closed signature
/// formula n_plus - n_minus = h22 - 2*h11 + 2.
bool check_formula(const SignatureLedger& ledger);

/// Event-script text: first non-blank line `start cubic | p4 | custom
/// <h11> <h22>`, then one event per line: `point`, `curve`, `surface <h11>`.
struct LedgerScript {
    SignatureLedger initial;
    std::vector<BlowupEvent> events;
};

LedgerScript parse_event_script(const std::string& text);

}  // namespace cremona
