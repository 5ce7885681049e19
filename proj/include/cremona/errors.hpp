#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Base class for every error this library throws on bad input or an
/// unreachable tolerance. Internal invariant violations use std::logic_error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Text input could not be parsed. position is a 0-based byte offset into
/// the offending string.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A certified enclosure could not be tightened to the requested width
/// within the iteration budget. The best interval reached is part of the
/// message; nothing is silently truncated.
class ToleranceError : public Error {
public:
    ToleranceError(const std::string& what, std::string best_lower,
                   std::string best_upper)
        : Error(what + " (best certified interval [" + best_lower + ", " +
                best_upper + "])"),
          lower_(std::move(best_lower)),
          upper_(std::move(best_upper)) {}

    const std::string& best_lower() const { return lower_; }
    const std::string& best_upper() const { return upper_; }

private:
    std::string lower_;
    std::string upper_;
};

}  // namespace cremona
