#ifndef SOFTSPINE_ERRORS_HPP
#define SOFTSPINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace softspine {

// Common base so callers can catch anything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Config file could not be parsed. line is 1-based.
struct ConfigError : Error {
    ConfigError(const std::string& msg, int line_no)
        : Error("config line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    int line;
};

// A parsed or constructed value violates a structural invariant.
struct ValidationError : Error {
    ValidationError(const std::string& field_name, const std::string& msg)
        : Error(field_name + ": " + msg), field(field_name) {}
    std::string field;
};

// Unit conversion between incompatible dimensions.
struct UnitError : Error {
    using Error::Error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Illegal event for the current pneumatic state.
struct TransitionError : Error {
    using Error::Error;
};

// CSV input could not be read. row is 1-based and counts the header.
struct IngestError : Error {
    IngestError(const std::string& msg, int row_no)
        : Error("row " + std::to_string(row_no) + ": " + msg), row(row_no) {}
    explicit IngestError(const std::string& msg) : Error(msg), row(0) {}
    int row;
};

// Parameter estimation failed (degenerate or insufficient data).
struct FitError : Error {
    using Error::Error;
};

// No plan satisfies the request; carries the best residual found.
struct UnreachableError : Error {
    UnreachableError(const std::string& msg, double best_error_m_)
        : Error(msg), best_error_m(best_error_m_) {}
    double best_error_m;
};

}  // namespace softspine

#endif
