#ifndef DESIGNKIT_ERROR_HPP
#define DESIGNKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace designkit {

// Structural / usage errors (bad indices, mismatched parameters, unknown
// labels). Verifiers report verdicts instead of throwing; see the *Report
// types.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input files.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                         : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

} // namespace designkit

#endif
