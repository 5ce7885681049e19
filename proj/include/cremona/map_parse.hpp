#pragma once

#include <string>
#include <vector>

#include "cremona/multipoly.hpp"

namespace cremona {

// Parses "[p_0 : p_1 : ... : p_n]" into component polynomials. Accepted
// term syntax: an optional integer coefficient followed by variable factors
// with optional ^exponent, "*" separators optional ("3x^2y" == "3*x^2*y").
// Variables are x, y, z, w, v; the family parameter s is only legal when
// allow_param is set. Two to five components (P^1 through P^4); a variable
// beyond the ambient dimension is an error at its first use.
std::vector<MultiPoly> parse_map_components(const std::string& text,
                                            bool allow_param);

// Parses "lo:hi:count" into count evenly spaced rational samples. count is
// a positive integer; count == 1 yields just lo.
std::vector<BigRational> parse_grid(const std::string& text);

}  // namespace cremona
