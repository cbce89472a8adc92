#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cliquesplit {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always kept sorted ascending

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? what + " at line " + std::to_string(line) : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class GraphError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, VertexSet witness = {})
        : Error(what), witness_(std::move(witness)) {}
    const VertexSet& witness() const noexcept { return witness_; }

private:
    VertexSet witness_;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class CliqueOverflow : public Error {
public:
    using Error::Error;
};

// Raised when a clique assumed maximum is not: carries a clique one larger.
class CliqueContradiction : public Error {
public:
    CliqueContradiction(const std::string& what, VertexSet clique)
        : Error(what), clique_(std::move(clique)) {}
    const VertexSet& clique() const noexcept { return clique_; }

private:
    VertexSet clique_;
};

// Every strategy of a partition pipeline failed.
class StrategiesExhausted : public Error {
public:
    StrategiesExhausted(const std::string& what, std::vector<std::string> diagnostics, int depth = 0)
        : Error(what), diagnostics_(std::move(diagnostics)), depth_(depth) {}
    const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }
    int depth() const noexcept { return depth_; }

private:
    std::vector<std::string> diagnostics_;
    int depth_;
};

}  // namespace cliquesplit
