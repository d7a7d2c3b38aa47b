#pragma once

#include <stdexcept>
#include <string>

namespace pda {

/// Error categories shared by every module. The CLI maps them onto exit
/// codes, so additions here need a corresponding entry in the dispatcher.
enum class ErrorKind {
    UnknownSymbol,
    EmptyAlphabet,
    BadInitial,
    BadFinal,
    DuplicateName,
    BadName,
    SyntaxError,
    NotDeterministic,
    NotStateless,
    EpsilonLanguage,
    BadSpec,
    BadBounds,
    SpaceTooLarge,
};

const char* to_string(ErrorKind kind);

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

} // namespace pda
