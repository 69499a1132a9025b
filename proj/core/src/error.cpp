#include "gentle/error.hpp"

namespace gentle {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::NotAString: return "NotAString";
        case ErrorKind::DuplicateLabel: return "DuplicateLabel";
        case ErrorKind::UnknownEntity: return "UnknownEntity";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::HereditaryCase: return "HereditaryCase";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::EmptyString: return "EmptyString";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::BothEmpty: return "BothEmpty";
        case ErrorKind::NotAnEdgeComponent: return "NotAnEdgeComponent";
        case ErrorKind::NoSuchComponent: return "NoSuchComponent";
        case ErrorKind::NoWalkStep: return "NoWalkStep";
        case ErrorKind::InvariantBreach: return "InvariantBreach";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError:
        case ErrorKind::NotAString:
        case ErrorKind::DuplicateLabel:
        case ErrorKind::UnknownEntity:
        case ErrorKind::InvalidSpec:
            return 2;
        case ErrorKind::InvariantBreach:
            return 4;
        default:
            return 3;
    }
}

void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace gentle
