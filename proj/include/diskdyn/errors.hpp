#pragma once

#include <stdexcept>
#include <string>

namespace diskdyn {

/// Invalid input: a point outside the disk, a malformed map, an unsupported
/// parameter. The CLI maps this to exit status 2.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure did not reach its target. Carries the last residual
/// so callers can report how far off it was. The CLI maps this to exit status 3.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace diskdyn
