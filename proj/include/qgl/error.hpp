// error.hpp — project-wide exception type for contract violations.
#pragma once

#include <stdexcept>
#include <string>

namespace qgl {

// Thrown when a documented precondition of an API is violated (bad
// configuration, mismatched registries/spaces, impossible requests).
// Verification *failures* are reported through result types, not thrown.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qgl
