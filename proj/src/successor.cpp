#include "cremona/successor.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace cremona {

namespace {

// Cursor over the original text that skips whitespace, so ParseError offsets
// point into what the user actually wrote.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t pos() const { return pos_; }

    void expect(const std::string& token) {
        skip_ws();
        if (text_.compare(pos_, token.size(), token) != 0)
            throw ParseError("expected '" + token + "'", pos_);
        pos_ += token.size();
    }

    bool try_consume(const std::string& token) {
        skip_ws();
        if (text_.compare(pos_, token.size(), token) != 0) return false;
        pos_ += token.size();
        return true;
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", start);
        if (pos_ - start > 9) throw ParseError("integer out of range", start);
        return std::stoll(text_.substr(start, pos_ - start));
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

SuccessorFunction SuccessorFunction::parse(const std::string& text) {
    Cursor c(text);
    c.expect("N");
    c.expect("=");
    std::int64_t n = c.integer();
    if (n < 1) throw ParseError("period must be at least 1", c.pos());
    c.expect(";");
    c.expect("tau");
    c.expect(":");

    SuccessorFunction tau;
    tau.period = n;
    tau.successors.assign(static_cast<std::size_t>(n), std::nullopt);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t i = 0; i < n; ++i) {
        if (i > 0) c.expect(",");
        c.skip_ws();
        std::size_t kpos = c.pos();
        std::int64_t k = c.integer();
        if (k < 1 || k > n)
            throw ParseError("index must lie in 1.." + std::to_string(n), kpos);
        if (seen[static_cast<std::size_t>(k - 1)])
            throw ParseError("duplicate index " + std::to_string(k), kpos);
        seen[static_cast<std::size_t>(k - 1)] = true;
        c.expect("->");
        if (!c.try_consume("inf"))
            tau.successors[static_cast<std::size_t>(k - 1)] = c.integer();
    }
    if (!c.done()) throw ParseError("trailing characters after tau table", c.pos());
    return tau;
}

std::string SuccessorFunction::to_spec() const {
    std::ostringstream out;
    out << "N=" << period << "; tau: ";
    for (std::int64_t k = 1; k <= period; ++k) {
        if (k > 1) out << ", ";
        out << k << "->";
        const auto& v = successors[static_cast<std::size_t>(k - 1)];
        if (v)
            out << *v;
        else
            out << "inf";
    }
    return out.str();
}

std::vector<std::string> SuccessorFunction::validate() const {
    std::vector<std::string> bad;
    if (period < 1) {
        bad.push_back("period must be at least 1");
        return bad;
    }
    if (successors.size() != static_cast<std::size_t>(period)) {
        bad.push_back("successor table must have exactly N entries");
        return bad;
    }
    std::set<std::int64_t> residues;
    for (std::int64_t k = 1; k <= period; ++k) {
        const auto& v = successors[static_cast<std::size_t>(k - 1)];
        if (!v) continue;
        if (*v < k + 2)
            bad.push_back("tau(" + std::to_string(k) + ") = " +
                          std::to_string(*v) + " violates tau(k) >= k + 2");
        std::int64_t r = ((*v % period) + period) % period;
        if (!residues.insert(r).second)
            bad.push_back("tau(" + std::to_string(k) + ") = " +
                          std::to_string(*v) +
                          " collides with another finite value mod N; the "
                          "periodic extension is not injective");
    }
    return bad;
}

std::optional<std::int64_t> SuccessorFunction::tau_at(std::int64_t k) const {
    if (k < 1) throw Error("tau_at: index must be >= 1");
    std::int64_t shift = (k - 1) / period * period;
    const auto& v = successors[static_cast<std::size_t>(k - 1 - shift)];
    if (!v) return std::nullopt;
    return *v + shift;
}

std::optional<std::int64_t> SuccessorFunction::tau_preimage(
    std::int64_t m) const {
    if (m < 1) throw Error("tau_preimage: index must be >= 1");
    for (std::int64_t k = 1; k <= period; ++k) {
        const auto& v = successors[static_cast<std::size_t>(k - 1)];
        if (!v) continue;
        // candidates are p = k + jN with tau(p) = v + jN = m
        std::int64_t diff = m - *v;
        if (diff % period != 0) continue;
        std::int64_t p = k + diff;
        if (p >= 1) return p;
    }
    return std::nullopt;
}

}  // namespace cremona
