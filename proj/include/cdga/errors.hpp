#pragma once

#include <stdexcept>
#include <string>

namespace cdga {

// Bad user input: malformed files, degree mismatches, violated preconditions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; never caused by user data.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cdga
