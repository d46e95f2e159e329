#pragma once

#include <stdexcept>
#include <string>

namespace sticky {

/// Base class for every recoverable error raised by the library. The CLI maps
/// these to exit code 1 (validation failure).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration or oracle is asked for a size beyond its cap.
class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(const std::string& what, std::size_t requested, std::size_t cap)
        : Error(what + ": size " + std::to_string(requested) + " exceeds cap "
                + std::to_string(cap)) { }
};

/// A construction step that cannot fail on valid input did fail. Indicates a
/// bug in a validator or in the construction itself, never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sticky
