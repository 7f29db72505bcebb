#pragma once

#include <stdexcept>
#include <string>

namespace krt {

enum class ErrorKind {
    Usage,        // bad input from the caller / command line
    Verification, // a checked identity failed
    Truncation,   // series truncation too small to certify a result
    Resource,     // configured size cap exceeded
    Internal      // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace krt
