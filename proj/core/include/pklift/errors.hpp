#pragma once

#include <stdexcept>

namespace pklift {

/// Thrown when a caller violates a documented precondition.
class contract_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails; indicates a bug,
/// never a property of the input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pklift
