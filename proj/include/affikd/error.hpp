#ifndef AFFIKD_ERROR_HPP
#define AFFIKD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace affikd {

// Malformed input text/file (bad columns, bad numbers, bad layout).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Well-formed input that violates a domain contract (empty chain set,
// dimension mismatch, duplicate id, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad command-line invocation; maps to exit code 2 in the CLI.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace affikd

#endif
