#pragma once

#include <stdexcept>
#include <string>

namespace reeb {

// Bad user input: parameters outside the admissible domain, malformed rationals.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Two independent constructions of the same object disagreed. Always a bug.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace reeb
