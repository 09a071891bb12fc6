#pragma once

#include <stdexcept>
#include <string>

namespace fibpascal {

// Precondition violated by the caller (index out of domain, bad cell, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An identity failed to hold where it must. Never expected on valid input;
// it means an arithmetic or bound bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Deliberate refusal to allocate past a configured cap.
class ResourceLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace fibpascal
