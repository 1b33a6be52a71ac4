#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace superindex {

// Typed domain error. `code` is the machine-readable identifier surfaced
// through the CLI diagnostics (GroupMismatch, NotDivisible, NotDominant,
// BlockViolation, UnsupportedAtypical, NotSinglyAtypical,
// NonDominantLeadingTerm, NonTermination, OddCosetUnsupported,
// NoSolutionInBox, UnstableTruncation, ParseError, NegativeCharacter).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw Error(std::move(code), message);
}

}  // namespace superindex
