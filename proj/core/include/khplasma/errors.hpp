#pragma once

#include <stdexcept>
#include <string>

namespace khplasma {

/// Argument outside the domain of the requested function (r <= 0, r <= alpha0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation inside the guard band around the r = alpha0 pole of the dressed potential.
class SingularityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input: invalid parameters, non-finite samples, mismatched grids.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested perturbation order has no closed form in this library.
class UnsupportedOrder : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace khplasma
