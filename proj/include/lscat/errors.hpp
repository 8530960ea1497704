#ifndef LSCAT_ERRORS_HPP
#define LSCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lscat {

enum class ErrorKind {
    empty_input,
    bad_parameter,
    not_a_simplex,
    not_simplicial,
    parent_mismatch,
    domain_mismatch,
    disconnected_complex,
    not_t0,
    agreement_failure,
    paste_failure,
    empty_fiber,
    resource_limit,
    parse_error,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::empty_input: return "EmptyInput";
        case ErrorKind::bad_parameter: return "BadParameter";
        case ErrorKind::not_a_simplex: return "NotASimplex";
        case ErrorKind::not_simplicial: return "NotSimplicial";
        case ErrorKind::parent_mismatch: return "ParentMismatch";
        case ErrorKind::domain_mismatch: return "DomainMismatch";
        case ErrorKind::disconnected_complex: return "DisconnectedComplex";
        case ErrorKind::not_t0: return "NotT0";
        case ErrorKind::agreement_failure: return "AgreementFailure";
        case ErrorKind::paste_failure: return "PasteFailure";
        case ErrorKind::empty_fiber: return "EmptyFiber";
        case ErrorKind::resource_limit: return "ResourceLimit";
        case ErrorKind::parse_error: return "ParseError";
    }
    return "Error";
}

/// All library failures are reported through this exception; `kind()` tells
/// callers (and the CLI exit-code logic) which contract was violated.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace lscat

#endif
