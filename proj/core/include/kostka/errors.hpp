#pragma once

#include <stdexcept>
#include <string>

namespace kostka {

// Two objects live in different universes (their sizes n differ).
class SizeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two partitions of the same n that are not related in the requested direction.
class NotComparableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An operation was called outside its documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input; `argument()` names the offending field.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string argument, const std::string& what)
        : std::invalid_argument(argument + ": " + what), argument_(std::move(argument)) {}

    const std::string& argument() const noexcept { return argument_; }

private:
    std::string argument_;
};

} // namespace kostka
