#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plat {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values from different ambient rectangles were combined.
struct BoundsMismatch : Error {
    using Error::Error;
};

/// A value violates a domain precondition (coordinate out of range,
/// negatively oriented query, non-filtration input, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Malformed textual input (rationals, lifetimes, covers, expressions).
struct ParseError : Error {
    explicit ParseError(const std::string& what, std::size_t position = npos)
        : Error(what), position(position) {}
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t position;
};

} // namespace plat
