#ifndef SOREC_ERRORS_HPP
#define SOREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sorec {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input text (bad field count, non-integer time, ...).
class ParseError : public Error {
public:
    explicit ParseError(const std::string &msg) : Error(msg) {}
};

// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string &msg) : Error(msg) {}
};

} // namespace sorec

#endif
