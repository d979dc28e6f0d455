#pragma once

#include <stdexcept>
#include <string>

namespace loopblocks {

/// Raised when an input lies outside the domain of a computation
/// (invalid rank, non-dominant weight where one is required, m(1), ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed serialized input: missing fields, wrong JSON types, bad literals.
class FormatError : public DomainError {
public:
    explicit FormatError(const std::string& what) : DomainError(what) {}
};

} // namespace loopblocks
