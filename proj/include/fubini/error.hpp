#ifndef FUBINI_ERROR_HPP
#define FUBINI_ERROR_HPP

#include <stdexcept>

namespace fubini {

/// Invalid input: malformed words or matrices, shape mismatches, violated
/// preconditions.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two deterministic methods that must agree did not. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fubini

#endif
