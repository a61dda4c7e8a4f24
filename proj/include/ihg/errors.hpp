#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ihg {

/// Raised by ImplicationHypergraph::build when the input is structurally invalid.
class ModelError : public std::runtime_error {
public:
    enum class Kind { UnknownProposition, DuplicatePropositionId, SelfIntersectingEdge, EmptyTailOrHead, InvalidId, EmptyLabel };

    ModelError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// DSL parse failure. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    enum class Kind { SyntaxError, DuplicateProposition, EmptyTailOrHead, SelfIntersectingEdge };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          kind_(kind), line_(line), column_(column) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

/// JSON document does not match the hypergraph schema. `path()` is e.g. "edges[0].tail[0]".
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& what)
        : std::runtime_error((path.empty() ? std::string("<root>") : path) + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// det(I - A) = 0: the information system has no unique solution.
class NotWellDefined : public std::runtime_error {
public:
    NotWellDefined() : std::runtime_error("information is not well-defined: det(I - A) = 0") {}
};

class NonPositiveParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InfeasibleSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CyclicInput : public std::invalid_argument {
public:
    CyclicInput() : std::invalid_argument("input hypergraph has a directed cycle") {}
};

} // namespace ihg
