#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gentle {

enum class ErrorKind {
    SyntaxError,
    NotAString,
    DuplicateLabel,
    UnknownEntity,
    InvalidSpec,
    HereditaryCase,
    NotNormalized,
    EmptyString,
    IndexOutOfRange,
    BothEmpty,
    NotAnEdgeComponent,
    NoSuchComponent,
    NoWalkStep,
    InvariantBreach,
};

std::string_view to_string(ErrorKind kind);

// 2 = parse/validation, 3 = domain precondition, 4 = internal invariant breach.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return gentle::exit_code(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void ensure(bool cond, const std::string& what) {
    if (!cond) fail(ErrorKind::InvariantBreach, what);
}

}  // namespace gentle
