#pragma once

#include <stdexcept>
#include <string>

namespace qpath {

/// Thrown when an adaptive integral cannot reach its requested tolerance.
class quadrature_error : public std::runtime_error {
public:
    explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a grid-based oracle detects an unresolved or aliased result.
class resolution_error : public std::runtime_error {
public:
    explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpath
