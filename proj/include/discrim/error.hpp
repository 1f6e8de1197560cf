#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discrim {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is the 0-based byte offset of the
/// offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An argument outside the operation's precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic exceeded the signed 128-bit range.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied search bound was inconsistent or turned out to be wrong.
class BoundError : public Error {
public:
    using Error::Error;
};

}  // namespace discrim
