#pragma once

#include <stdexcept>
#include <string>

namespace hulthen {

/// Thrown when an iterative numerical routine fails to reach its target
/// accuracy. Carries the best error estimate achieved so callers can decide
/// whether the partial result is still usable.
class numerics_error : public std::runtime_error {
public:
    numerics_error(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// Thrown when a request exceeds a configured capacity limit (e.g. the exact
/// normalization expansion past its maximum supported index).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace hulthen
