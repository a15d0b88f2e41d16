#pragma once

#include <stdexcept>
#include <string>

namespace pace {

/// Error raised by every module; the message carries the failing
/// operation and enough context to locate the offending input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pace
