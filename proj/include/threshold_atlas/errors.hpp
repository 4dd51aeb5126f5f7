#pragma once

#include <stdexcept>
#include <string>

namespace threshold_atlas {

// Input outside an operation's documented domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Interpolation produced a non-integral coefficient.
class IntegralityError : public std::runtime_error {
public:
    explicit IntegralityError(const std::string& what) : std::runtime_error(what) {}
};

// Finite-field samples disagree with the interpolant (q range too small).
class SamplingError : public std::runtime_error {
public:
    explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// Internal cross-check failed; indicates a bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// A construction violates the vertex-1 convention.
class ConventionError : public DomainError {
public:
    explicit ConventionError(const std::string& what) : DomainError(what) {}
};

}  // namespace threshold_atlas
