#include "cremona/ledger.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace cremona {

BlowupEvent BlowupEvent::surface(std::int64_t h11_s) {
    if (h11_s < 1) throw Error("a surface center needs h11 >= 1");
    return {Kind::Surface, h11_s};
}

std::int64_t BlowupEvent::rank_delta() const {
    switch (kind) {
        case Kind::Point: return 1;
        case Kind::Curve: return 2;
        case Kind::Surface: return surface_h11;
    }
    throw std::logic_error("unreachable");
}

std::string BlowupEvent::label() const {
    switch (kind) {
        case Kind::Point: return "point";
        case Kind::Curve: return "curve";
        case Kind::Surface:
            return "surface(h11=" + std::to_string(surface_h11) + ")";
    }
    throw std::logic_error("unreachable");
}

std::int64_t cubic_fourfold_h22() {
    // Griffiths residue count for a smooth cubic X in P^5: the primitive
    // part of H^{2,2} has one basis class per cubic monomial in six
    // variables that survives the Jacobian ideal of the Fermat cubic, i.e.
    // per squarefree monomial. The hyperplane class squared adds one.
    std::int64_t squarefree = 0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c) ++squarefree;
    return squarefree + 1;
}

namespace {

SignatureLedger from_profile(HodgeProfile p) {
    if (p.h11 < 0 || p.h22 < 0)
        throw Error("Hodge numbers must be nonnegative");
    std::int64_t sig = p.h22 - 2 * p.h11 + 2;
    if ((p.h22 + sig) % 2 != 0)
        throw Error("signature formula gives non-integral counts for this profile");
    std::int64_t plus = (p.h22 + sig) / 2;
    std::int64_t minus = (p.h22 - sig) / 2;
    if (plus < 0 || minus < 0)
        throw Error("signature formula gives negative counts for this profile");
    SignatureLedger l;
    l.profile = p;
    l.n_plus = plus;
    l.n_minus = minus;
    return l;
}

}  // namespace

SignatureLedger new_ledger(LedgerPreset preset) {
    switch (preset) {
        case LedgerPreset::CubicFourfold:
            return from_profile({1, cubic_fourfold_h22()});
        case LedgerPreset::P4:
            return from_profile({1, 1});
    }
    throw std::logic_error("unreachable");
}

SignatureLedger new_ledger_custom(std::int64_t h11, std::int64_t h22) {
    return from_profile({h11, h22});
}

SignatureLedger apply_blowup(const SignatureLedger& ledger,
                             const BlowupEvent& event) {
    SignatureLedger next = ledger;
    LedgerStep step{event, {}};
    next.profile.h11 += 1;
    next.profile.h22 += event.rank_delta();
    next.n_minus += 1;
    switch (event.kind) {
        case BlowupEvent::Kind::Point:
            step.added.push_back({"E(point) . H_E^2", 2, -1});
            break;
        case BlowupEvent::Kind::Curve:
            next.n_plus += 1;
            step.added.push_back({"E(curve) . H_E", 1, +1});
            step.added.push_back({"E(curve) . H_E^2", 2, -1});
            break;
        case BlowupEvent::Kind::Surface:
            next.n_plus += event.surface_h11 - 1;
            for (std::int64_t k = 1; k < event.surface_h11; ++k)
                step.added.push_back(
                    {"E(surface) . H_E . p*(a" + std::to_string(k) + ")", 1,
                     +1});
            step.added.push_back({"E(surface) . H_E^2", 2, -1});
            break;
    }
    next.history.push_back(std::move(step));
    return next;
}

bool check_formula(const SignatureLedger& ledger) {
    return ledger.n_plus - ledger.n_minus ==
           ledger.profile.h22 - 2 * ledger.profile.h11 + 2;
}

namespace {

struct Line {
    std::string text;
    std::size_t offset;  // byte offset of the line start
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::size_t at = 0;
    while (at <= text.size()) {
        std::size_t nl = text.find('\n', at);
        std::size_t end = nl == std::string::npos ? text.size() : nl;
        lines.push_back({text.substr(at, end - at), at});
        if (nl == std::string::npos) break;
        at = nl + 1;
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> t;
    std::string w;
    while (in >> w) t.push_back(w);
    return t;
}

std::int64_t parse_count(const std::string& tok, std::size_t offset) {
    if (tok.empty() || tok.size() > 9 ||
        tok.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a nonnegative integer, got '" + tok + "'",
                         offset);
    return std::stoll(tok);
}

}  // namespace

LedgerScript parse_event_script(const std::string& text) {
    LedgerScript script;
    bool started = false;
    for (const Line& line : split_lines(text)) {
        std::vector<std::string> tok = tokens_of(line.text);
        if (tok.empty()) continue;
        if (!started) {
            if (tok[0] != "start")
                throw ParseError("script must begin with a start line",
                                 line.offset);
            if (tok.size() >= 2 && tok[1] == "cubic" && tok.size() == 2)
                script.initial = new_ledger(LedgerPreset::CubicFourfold);
            else if (tok.size() >= 2 && tok[1] == "p4" && tok.size() == 2)
                script.initial = new_ledger(LedgerPreset::P4);
            else if (tok.size() == 4 && tok[1] == "custom")
                script.initial = new_ledger_custom(
                    parse_count(tok[2], line.offset),
                    parse_count(tok[3], line.offset));
            else
                throw ParseError(
                    "start line must be 'start cubic', 'start p4' or "
                    "'start custom <h11> <h22>'",
                    line.offset);
            started = true;
            continue;
        }
        if (tok[0] == "point" && tok.size() == 1) {
            script.events.push_back(BlowupEvent::point());
        } else if (tok[0] == "curve" && tok.size() == 1) {
            script.events.push_back(BlowupEvent::curve());
        } else if (tok[0] == "surface" && tok.size() == 2) {
            std::int64_t h = parse_count(tok[1], line.offset);
            if (h < 1)
                throw ParseError("surface events need h11 >= 1", line.offset);
            script.events.push_back(BlowupEvent::surface(h));
        } else {
            throw ParseError("unknown event '" + line.text + "'", line.offset);
        }
    }
    if (!started) throw ParseError("empty event script", 0);
    return script;
}

}  // namespace cremona
