#pragma once

#include <stdexcept>
#include <string>

namespace levy {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// argument within the pole tolerance of a singularity
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// kappa_s as s -> 1
class DivergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value_(value), error_(error_estimate) {}

    double value() const noexcept { return value_; }
    double error_estimate() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

} // namespace levy
