#ifndef OMCAT_ERRORS_HPP
#define OMCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace omcat {

// Domain errors map to CLI exit code 1, resource errors to exit code 2.
struct DomainError : std::runtime_error {
    std::string kind;
    DomainError(std::string k, const std::string& msg)
        : std::runtime_error(msg), kind(std::move(k)) {}
};

struct DimensionError : DomainError {
    explicit DimensionError(const std::string& msg) : DomainError("dimension", msg) {}
};

struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by operations that require an acyclic cone relation.
struct NonEuclideanError : DomainError {
    explicit NonEuclideanError(const std::string& msg) : DomainError("non_euclidean", msg) {}
};

struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace omcat

#endif
