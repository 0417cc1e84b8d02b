#ifndef DOTPAIRS_ERRORS_HPP
#define DOTPAIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dotpairs {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to different field backends (or different moduli).
class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& what) : Error(what) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Malformed textual input (scalars, point-set files).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A precondition or parameter constraint was violated.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A generated object failed its own exact post-validation.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

} // namespace dotpairs

#endif
