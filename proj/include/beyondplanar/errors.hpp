#pragma once

#include <stdexcept>
#include <string>

namespace bp {

// Malformed or out-of-contract input (CLI exit code 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Degenerate drawing geometry: overlaps, touching, concurrency, double crossings.
class GeometryError : public InputError {
public:
    using InputError::InputError;
};

// A search exceeded its configured budget (CLI exit code 3).
class ResourceBoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bp
