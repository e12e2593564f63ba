#pragma once

#include <stdexcept>
#include <string>

namespace polyadic {

enum class ErrorCode {
    OutOfRange,
    NotLatinSquare,
    NotAssociative,
    NoIdentity,
    KTooLarge,
    NotASubgroup,
    NotNormal,
    OrderBudgetExceeded,
    TableBudgetExceeded,
    AxiomViolation,
    NotCentral,
    WrongLength,
    BadLength,
    NoSolution,
    MultipleSolutions,
    IdentityMismatch,
    FormulaMismatch,
    MapNotHomomorphism,
    DegenerateEigenbasis,
    EmptyKernel,
    NotInKernel,
    AnchorMismatch,
    LiftMismatch,
    HomomorphismFailure,
    ParseError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception; `code()` identifies the failed check or contract.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

    /// Usage-level errors (bad input, exceeded budgets) as opposed to
    /// failed mathematical checks. Drives the CLI exit-code split.
    bool is_input_error() const {
        switch (code_) {
            case ErrorCode::OutOfRange:
            case ErrorCode::KTooLarge:
            case ErrorCode::OrderBudgetExceeded:
            case ErrorCode::TableBudgetExceeded:
            case ErrorCode::WrongLength:
            case ErrorCode::BadLength:
            case ErrorCode::ParseError:
                return true;
            default:
                return false;
        }
    }

private:
    ErrorCode code_;
};

}  // namespace polyadic
