#pragma once

#include <stdexcept>
#include <string>

namespace divstr {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or contract-violating input (length mismatch, unknown token, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// A text input (string set, DAG, instance file) could not be parsed.
class ParseError : public InvalidInputError {
public:
    using InvalidInputError::InvalidInputError;
};

/// An enumeration or table exceeded its resource budget.
class BudgetError : public Error {
public:
    using Error::Error;
};

/// The requested selection cannot exist (e.g. fewer than K strings available).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// The only common subsequence of the inputs is the empty string.
class NoLcsError : public Error {
public:
    using Error::Error;
};

/// Structural properties a string DAG can violate, one variant per check.
enum class DagDefect {
    NoVertices,
    BadEdge,
    DuplicateVertexId,
    Cycle,
    NoSource,
    MultipleSources,
    NoSink,
    MultipleSinks,
    OffPathVertex,
    InconsistentDepth,
    LengthMismatch,
    DeclarationMismatch,
};

const char* to_string(DagDefect defect);

/// Thrown by DAG validation; carries the violated property.
class ValidationError : public Error {
public:
    ValidationError(DagDefect defect, const std::string& detail)
        : Error(std::string(to_string(defect)) + ": " + detail), defect_(defect) {}

    DagDefect defect() const { return defect_; }

private:
    DagDefect defect_;
};

}  // namespace divstr
