#pragma once

#include <stdexcept>
#include <string>

namespace mmst {

// Structurally malformed input: bad indices, loops, mixed-sign preconditions.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

// Geometric degeneracy: duplicate points, collinear triples, points on a
// splitting axis where the operation forbids them.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// Recognition requires a connected input graph.
class DisconnectedGraphError : public std::runtime_error {
public:
    explicit DisconnectedGraphError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mmst
