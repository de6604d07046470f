#pragma once

#include <stdexcept>
#include <string>

namespace eqcoh {

// Raised when an internally guaranteed exactness property fails: a division
// that must be exact, an integrality certificate, an expansion identity.
// Never caused by user input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what_arg)
        : std::logic_error(what_arg) {}
};

}  // namespace eqcoh
