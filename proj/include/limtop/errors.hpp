#pragma once

#include <stdexcept>
#include <string>

namespace limtop {

/// Coarse failure category, used by the CLI to pick an exit code.
enum class ErrorKind { Parse, Precondition, Budget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = -1)
        : Error(ErrorKind::Parse,
                line >= 0 ? "parse error at line " + std::to_string(line) + ": " + msg
                          : "parse error: " + msg),
          line(line) {}
    int line;
};

struct NotSimplicialError : Error {
    explicit NotSimplicialError(const std::string& msg)
        : Error(ErrorKind::Precondition, "not simplicial: " + msg) {}
};

struct MissingFaceError : Error {
    MissingFaceError(const std::string& simplex, const std::string& face)
        : Error(ErrorKind::Precondition,
                "face " + face + " of " + simplex + " is missing") {}
};

struct SimplexNotFoundError : Error {
    explicit SimplexNotFoundError(const std::string& simplex)
        : Error(ErrorKind::Precondition, "simplex " + simplex + " not in complex") {}
};

struct NotSubcomplexError : Error {
    explicit NotSubcomplexError(const std::string& msg)
        : Error(ErrorKind::Precondition, "not a subcomplex: " + msg) {}
};

struct NotNestedError : Error {
    explicit NotNestedError(int stage)
        : Error(ErrorKind::Precondition,
                "stage " + std::to_string(stage) +
                    " is not contained in stage " + std::to_string(stage + 1)),
          stage(stage) {}
    int stage;
};

struct StarUnstableError : Error {
    StarUnstableError(const std::string& simplex, int declared, int grew_at)
        : Error(ErrorKind::Precondition,
                "star of " + simplex + " declared stable at stage " +
                    std::to_string(declared) + " but grows at stage " +
                    std::to_string(grew_at)) {}
};

struct InconsistentIdentificationError : Error {
    explicit InconsistentIdentificationError(const std::string& msg)
        : Error(ErrorKind::Precondition, "inconsistent identification: " + msg) {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& msg)
        : Error(ErrorKind::Precondition, "complex is not connected: " + msg) {}
};

struct PreconditionViolatedError : Error {
    explicit PreconditionViolatedError(const std::string& msg)
        : Error(ErrorKind::Precondition, msg) {}
};

struct NonMonotoneError : Error {
    explicit NonMonotoneError(const std::string& msg)
        : Error(ErrorKind::Precondition, "schema is not monotone: " + msg) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(const std::string& msg)
        : Error(ErrorKind::Budget, "budget exceeded: " + msg) {}
};

struct WordProblemUnresolvedError : Error {
    explicit WordProblemUnresolvedError(const std::string& msg)
        : Error(ErrorKind::Budget, "word problem unresolved: " + msg) {}
};

} // namespace limtop
