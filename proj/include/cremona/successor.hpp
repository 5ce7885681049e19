#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

// N-periodic successor map on indices 1,2,3,... Values are either a finite
// index tau(k) or infinity (nullopt). Only the residues 1..N are stored; the
// extension rule is tau(k + N) = tau(k) + N for finite values.
struct SuccessorFunction {
    std::int64_t period = 1;
    // successors[k-1] holds tau(k) for k in 1..period; nullopt means infinity
    std::vector<std::optional<std::int64_t>> successors;

    // Text form "N=<int>; tau: 1-><int|inf>, ..., N-><int|inf>".
    // Whitespace-insensitive; every k in 1..N must appear exactly once.
    static SuccessorFunction parse(const std::string& text);
    std::string to_spec() const;

    // Admissibility diagnostics; empty means valid. Checked conditions:
    //   - period >= 1 and the stored table has exactly `period` entries
    //   - tau(k) >= k + 2 for every finite value
    //   - finite values are pairwise distinct mod N (this is equivalent to
    //     injectivity of the N-periodic extension)
    std::vector<std::string> validate() const;
    bool is_valid() const { return validate().empty(); }

    // tau at any index k >= 1 under the periodic extension.
    std::optional<std::int64_t> tau_at(std::int64_t k) const;

    // The unique p >= 1 with tau(p) = m, if any. Injectivity of a valid
    // function makes the result well defined; for invalid input the lowest
    // matching residue wins. Always empty for m = 1 since tau(k) >= k + 2.
    std::optional<std::int64_t> tau_preimage(std::int64_t m) const;

    bool operator==(const SuccessorFunction&) const = default;
};

}  // namespace cremona
