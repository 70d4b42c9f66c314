#pragma once

#include <stdexcept>
#include <string>

namespace uthresh {

/// Bad run configuration or invalid argument combination. CLI exit code 1.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unreadable, missing, or malformed input file. CLI exit code 2.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Data that cannot support the requested computation (e.g. a ROC sweep
/// with an empty class). CLI exit code 3.
struct DegenerateDataError : std::runtime_error {
    explicit DegenerateDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace uthresh
