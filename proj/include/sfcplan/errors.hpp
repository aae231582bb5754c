#ifndef SFCPLAN_ERRORS_HPP
#define SFCPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sfcplan {

// Process exit codes shared by the library error taxonomy and the CLI.
enum class ExitCode : int {
    ok = 0,
    parse_error = 2,
    validation_error = 3,
    infeasible = 4,
    unstable = 5,
    diverged = 6,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ExitCode code() const noexcept { return code_; }

private:
    ExitCode code_;
};

// Malformed input file (bad syntax, unknown directive, unreadable number).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error(ExitCode::parse_error, message) {}
};

// Structurally valid input that violates a domain invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error(ExitCode::validation_error, message) {}
};

// No subchain count can satisfy the delay SLA.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& message) : Error(ExitCode::infeasible, message) {}
};

// A queueing station is saturated (arrival rate >= service capacity).
class UnstableError : public Error {
public:
    explicit UnstableError(const std::string& message) : Error(ExitCode::unstable, message) {}
};

// A simulated queue exceeded its length bound; the input is mis-specified.
class DivergedError : public Error {
public:
    explicit DivergedError(const std::string& message) : Error(ExitCode::diverged, message) {}
};

} // namespace sfcplan

#endif
