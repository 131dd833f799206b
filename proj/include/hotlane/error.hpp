#pragma once

#include <stdexcept>
#include <string>

namespace hotlane {

/// Argument outside the mathematical domain of an operation (negative density, p = 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simulation cannot continue (HOT lanes gridlocked, so the toll is undefined).
class GridlockError : public std::runtime_error {
public:
    GridlockError(const std::string& what, double time_h)
        : std::runtime_error(what), time_h_(time_h) {}
    double time() const noexcept { return time_h_; }

private:
    double time_h_;
};

/// Observation or record set carries no identifying information for the requested estimator.
class NotEstimable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A stated demand precondition (assumption A1) does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hotlane
