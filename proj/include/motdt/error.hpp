#pragma once

#include <stdexcept>
#include <string>

namespace motdt {

enum class Errc {
    DivisionByZero,
    DenominatorVanishes,
    PoleAtOne,
    NonIntegerValue,
    OrderMismatch,
    NonzeroConstantTerm,
    ConstantTermNotOne,
    SupportViolation,
    UnsupportedDisconnectedCover,
    CoverInconsistent,
    InvalidExpression,
    InvalidGraph,
    InvalidParams,
    ParseError,
    NormalCrossingFailure,
    GraphMismatch,
    NonGenericParameter,
    WrongSimpleOrdering,
    MismatchWithEngine,
};

const char* errc_name(Errc c);

// Errors carry a code so callers (and the CLI exit-code mapping) can branch
// without string matching.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

    // Validation errors are the caller's fault; everything else is an engine bug
    // or an unsupported configuration.
    bool is_validation() const;

private:
    Errc code_;
};

}  // namespace motdt
