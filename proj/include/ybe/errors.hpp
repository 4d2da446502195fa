#pragma once

#include <stdexcept>
#include <string>

namespace ybe {

enum class Errc {
    NotBijective,
    IncompleteTable,
    NotAPermutation,
    GroupTooLarge,
    NotAbelian,
    NotInGroup,
    NotSymmetricSet,
    IllDefinedInduced,
    NotLevelTwo,
    UnequalCycles,
    InvalidBasisOverride,
    IndexOutOfRange,
    LevelMismatch,
    SingularBasis,
    TooLarge,
    CapExceeded,
    SyntaxError,
    UnknownName,
    MixedModes,
    Internal,
};

// Input / construction errors carry a line number when they come from a file.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          code(code),
          line(line) {}

    Errc code;
    int line;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg, int line = -1) {
    throw Error(code, msg, line);
}

// True input/parse errors vs. failed mathematical preconditions; the CLI maps
// these to exit codes 2 and 1 respectively.
inline bool is_input_error(Errc c) {
    switch (c) {
    case Errc::NotBijective:
    case Errc::IncompleteTable:
    case Errc::NotAPermutation:
    case Errc::IndexOutOfRange:
    case Errc::SyntaxError:
    case Errc::UnknownName:
    case Errc::MixedModes:
    case Errc::CapExceeded:
    case Errc::TooLarge:
    case Errc::GroupTooLarge:
        return true;
    default:
        return false;
    }
}

}  // namespace ybe
