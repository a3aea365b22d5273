#pragma once

#include <stdexcept>
#include <string>

namespace plagdetect {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid caller-supplied configuration (bad n-gram order, threshold above
/// the complete cutoff, unknown measure name, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace plagdetect
