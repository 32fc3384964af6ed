#pragma once

#include <stdexcept>
#include <string>

namespace geodetic {

// Thrown when a requested graph would exceed the 32-vertex capacity.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct NotGeodeticError : std::runtime_error {
    explicit NotGeodeticError(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedError : std::runtime_error {
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidCutError : std::runtime_error {
    explicit InvalidCutError(const std::string& what) : std::runtime_error(what) {}
};

struct BadParameterError : std::runtime_error {
    explicit BadParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geodetic
