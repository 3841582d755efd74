#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace covbetti {

/// Base for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. `position` is a byte offset for graph6 and a
/// 1-based line number for edge lists.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A parameter outside its documented legal range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// An input violating an operation precondition (other than a range).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Refusal to run a computation above a configured size limit.
class ResourceLimitError : public Error {
public:
    ResourceLimitError(const std::string& what, int limit)
        : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}

    [[nodiscard]] int limit() const noexcept { return limit_; }

private:
    int limit_;
};

}  // namespace covbetti
