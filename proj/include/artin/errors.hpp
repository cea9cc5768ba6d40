#pragma once

#include <stdexcept>
#include <string>

namespace artin {

enum class ErrorKind {
    NonSphericalType,
    RankCapExceeded,
    InvalidSpec,
    ParseError,
    ContextMismatch,
    NotSimple,
    EmptySet,
    NotInUSS,
    NotConjugating,
    UnclassifiableLabel,
    NotIrreducible,
    NotProper,
    EqualSubgroups,
    InvalidPath,
    BudgetExceeded,
    NoMinimumFound,
    InternalInconsistency,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NonSphericalType: return "NonSphericalType";
        case ErrorKind::RankCapExceeded: return "RankCapExceeded";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::NotSimple: return "NotSimple";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::NotInUSS: return "NotInUSS";
        case ErrorKind::NotConjugating: return "NotConjugating";
        case ErrorKind::UnclassifiableLabel: return "UnclassifiableLabel";
        case ErrorKind::NotIrreducible: return "NotIrreducible";
        case ErrorKind::NotProper: return "NotProper";
        case ErrorKind::EqualSubgroups: return "EqualSubgroups";
        case ErrorKind::InvalidPath: return "InvalidPath";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NoMinimumFound: return "NoMinimumFound";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace artin
