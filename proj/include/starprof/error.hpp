#pragma once

#include <stdexcept>
#include <string>

namespace starprof {

/// Thrown when a request exceeds one of the hard size guards
/// (partition cap, exact-dimension cap, exact-chain deck size).
class SizeLimitError : public std::length_error {
public:
    explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

/// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace starprof
