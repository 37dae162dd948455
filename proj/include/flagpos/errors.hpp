#pragma once

#include <stdexcept>
#include <string>

namespace flagpos {

// Invalid argument to an operation (shape mismatch, index out of range, ...).
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Input value fails a semantic precondition (not positive, rank deficient, ...).
class StateError : public std::runtime_error {
public:
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds a configured size bound.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace flagpos
