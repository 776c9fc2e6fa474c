#pragma once

#include <stdexcept>
#include <string>

namespace fll {

// Thrown when an enumeration would exceed its configured resource guard.
// Guards are explicit arguments or config values, so callers can distinguish
// "refused by policy" from a genuine domain error and retry with a larger
// guard if they accept the cost.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace fll
