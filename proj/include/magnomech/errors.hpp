// errors.hpp — Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace magnomech {

// Eigen-iteration failure, singular linear system, or a non-finite result.
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// An operation required a dynamically stable drift matrix and did not get one,
// or a time integration diverged.
struct UnstableError : std::runtime_error {
    explicit UnstableError(const std::string& what) : std::runtime_error(what) {}
};

// A sweep found no stable grid point in any requested direction.
struct AllPointsUnstableError : std::runtime_error {
    explicit AllPointsUnstableError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace magnomech
