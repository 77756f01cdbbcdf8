#pragma once

#include <stdexcept>
#include <string>

namespace spatnet {

inline constexpr const char* kVersion = "0.1.0";

/// Raised for problems the caller can fix: bad input files, malformed
/// configuration, invalid parameter combinations. The CLI maps these to
/// exit code 2; anything else lands on exit code 3.
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace spatnet
