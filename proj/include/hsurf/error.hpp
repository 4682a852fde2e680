#pragma once

#include <stdexcept>
#include <string>

namespace hsurf {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    Domain,      // input outside an operation's mathematical domain
    Validation,  // a structural invariant of a complex or file is violated
    Numeric,     // a solver failed or an internal consistency check tripped
    Budget,      // an iteration/expansion budget was exhausted, or a flow stalled
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace hsurf
