#pragma once

#include <stdexcept>
#include <string>

namespace ginicor {

/// Broad failure classes. The CLI maps each one to its own exit code.
enum class ErrorKind {
    usage,    // invalid parameter or argument combination
    data,     // malformed or inconsistent input data
    numeric,  // degenerate data or an estimator precondition on the sample
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_usage(const std::string& message) {
    throw Error(ErrorKind::usage, message);
}

[[noreturn]] inline void throw_data(const std::string& message) {
    throw Error(ErrorKind::data, message);
}

[[noreturn]] inline void throw_numeric(const std::string& message) {
    throw Error(ErrorKind::numeric, message);
}

}  // namespace ginicor
