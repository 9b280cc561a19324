#include "motdt/error.hpp"

namespace motdt {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DenominatorVanishes: return "DenominatorVanishes";
        case Errc::PoleAtOne: return "PoleAtOne";
        case Errc::NonIntegerValue: return "NonIntegerValue";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::NonzeroConstantTerm: return "NonzeroConstantTerm";
        case Errc::ConstantTermNotOne: return "ConstantTermNotOne";
        case Errc::SupportViolation: return "SupportViolation";
        case Errc::UnsupportedDisconnectedCover: return "UnsupportedDisconnectedCover";
        case Errc::CoverInconsistent: return "CoverInconsistent";
        case Errc::InvalidExpression: return "InvalidExpression";
        case Errc::InvalidGraph: return "InvalidGraph";
        case Errc::InvalidParams: return "InvalidParams";
        case Errc::ParseError: return "ParseError";
        case Errc::NormalCrossingFailure: return "NormalCrossingFailure";
        case Errc::GraphMismatch: return "GraphMismatch";
        case Errc::NonGenericParameter: return "NonGenericParameter";
        case Errc::WrongSimpleOrdering: return "WrongSimpleOrdering";
        case Errc::MismatchWithEngine: return "MismatchWithEngine";
    }
    return "Unknown";
}

bool Error::is_validation() const {
    switch (code_) {
        case Errc::InvalidParams:
        case Errc::ParseError:
        case Errc::InvalidGraph:
        case Errc::InvalidExpression:
        case Errc::NonGenericParameter:
        case Errc::WrongSimpleOrdering:
        case Errc::OrderMismatch:
            return true;
        default:
            return false;
    }
}

}  // namespace motdt
